#include <doctest.h>

#include "momentcf/contfrac.hpp"
#include "momentcf/moments.hpp"
#include "momentcf/random.hpp"
#include "momentcf/sequences.hpp"
#include "oracles.hpp"

using namespace momentcf;
using Q = Rational;

namespace {

MomentFunctional<Rational> genocchi_functional(std::size_t n) {
  std::vector<Q> mu;
  for (std::size_t k = 0; k <= n; ++k) mu.push_back(genocchi(static_cast<long>(2 * k + 2)));
  return {mu, "x"};
}

bool throws(Errc code, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("S-fractions of the Genocchi and median Genocchi numbers") {
  CHECK(cf_to_series(genocchi_sfrac(5), 5).coeffs() == std::vector<Q>{1, 1, 3, 17, 155, 2073});
  CHECK(cf_to_series(median_genocchi_sfrac(6), 6).coeffs() == std::vector<Q>{1, 1, 2, 8, 56, 608, 9440});
}

TEST_CASE("J-fraction of a point mass") {
  JFrac<Rational> j;
  j.gammas = {Q(5, 3)};
  j.terminates = true;
  CHECK(cf_to_series(j, 2).coeffs() == std::vector<Q>{1, Q(5, 3), Q(25, 9)});
}

TEST_CASE("depth contract") {
  // Three alphas fix coefficients through t^3 only.
  CHECK(throws(Errc::kInsufficientDepth, [] { cf_to_series(genocchi_sfrac(3), 4); }));
  CHECK(cf_to_series(genocchi_sfrac(3), 3).coeffs() == std::vector<Q>{1, 1, 3, 17});
  CHECK(throws(Errc::kInsufficientDepth, [] { cf_to_series(median_genocchi_jfrac(2), 4); }));
}

TEST_CASE("series_to_jfrac on the Genocchi moments") {
  const auto j = series_to_jfrac(genocchi_functional(5));
  CHECK(j.gammas == std::vector<Q>{1, 6, 15});
  CHECK(j.betas == std::vector<Q>{2, 24});
  CHECK_FALSE(j.terminates);
}

TEST_CASE("series_to_jfrac of a point mass terminates") {
  std::vector<Q> mu{1};
  for (int k = 0; k < 6; ++k) mu.push_back(mu.back() * Q(-2, 7));
  const auto j = series_to_jfrac(MomentFunctional<Rational>{mu, "x"});
  CHECK(j.terminates);
  CHECK(j.gammas == std::vector<Q>{Q(-2, 7)});
  CHECK(j.betas.empty());
  const auto s = series_to_sfrac(MomentFunctional<Rational>{mu, "x"});
  CHECK(s.terminates);
  CHECK(s.alphas == std::vector<Q>{Q(-2, 7)});
}

TEST_CASE("singular Hankel determinants are rejected") {
  // mu = (1, 0, 0, 1, ...): Delta_2 = 0 but the functional is not finitely supported.
  const MomentFunctional<Rational> bad{std::vector<Q>{1, 0, 0, 1, 0}, "x"};
  CHECK(throws(Errc::kSingularHankel, [&] { series_to_jfrac(bad); }));
  const MomentFunctional<Rational> zero{std::vector<Q>{0, 1}, "x"};
  CHECK(throws(Errc::kSingularHankel, [&] { series_to_jfrac(zero); }));
}

TEST_CASE("series_to_sfrac on Genocchi moments") {
  CHECK(series_to_sfrac(genocchi_functional(8)).alphas == genocchi_sfrac(8).alphas);
  CHECK(genocchi_sfrac(6).alphas == std::vector<Q>{1, 2, 4, 6, 9, 12});
}

TEST_CASE("Hankel determinants") {
  CHECK(hankel_det(genocchi_functional(4), 3) == Q(96));
  CHECK(hankel_det(genocchi_functional(4), 1) == Q(1));
  CHECK(hankel_det(genocchi_functional(4), 0) == Q(1));
  CHECK(hankel_det(MomentFunctional<Rational>{std::vector<Q>{1, Q(3), Q(9)}, "x"}, 2) == Q(0));
  // Symbolic route agrees with the rational one after evaluation.
  const auto g = MPoly::generators({"u", "v"});
  const MomentFunctional<MPoly> sym{std::vector<MPoly>{MPoly(1), g[0], g[1], g[0] * g[1], g[1] * g[1]}, "x"};
  const std::vector<Q> point{Q(2, 3), Q(5)};
  const MomentFunctional<Rational> num{std::vector<Q>{1, Q(2, 3), Q(5), Q(10, 3), Q(25)}, "x"};
  CHECK(hankel_det(sym, 3).eval(point) == hankel_det(num, 3));
}

TEST_CASE("contractions") {
  SFrac<Rational> s;
  s.alphas = {1, 1, 4, 4, 9, 9, 16, 16};
  const auto odd = contract(s, ContractionKind::kOdd);
  REQUIRE(odd.lead);
  CHECK(*odd.lead == Q(1));
  CHECK(odd.jfrac.gammas.front() == Q(2));
  CHECK(odd.jfrac.betas.front() == Q(4));
  const auto even = contract(s, ContractionKind::kEven);
  CHECK(even.jfrac.gammas.front() == Q(1));
  CHECK(even.jfrac.betas.front() == Q(1));
  // Only complete J levels survive, so eight alphas fix t^0..t^7.
  CHECK(cf_to_series(even, 7) == cf_to_series(s, 7));
  CHECK(cf_to_series(odd, 7) == cf_to_series(s, 7));
}

TEST_CASE("expansions agree with lattice-path enumeration") {
  RationalSampler rng(7, "lattice-unit");
  for (int trial = 0; trial < 3; ++trial) {
    JFrac<Rational> j;
    for (int i = 0; i < 4; ++i) j.gammas.push_back(rng.next());
    for (int i = 0; i < 3; ++i) j.betas.push_back(rng.next());
    CHECK(cf_to_series(j, 7).coeffs() == oracle::motzkin_moments(j.gammas, j.betas, 7));
    SFrac<Rational> s;
    for (int i = 0; i < 6; ++i) s.alphas.push_back(rng.next());
    CHECK(cf_to_series(s, 6).coeffs() == oracle::dyck_moments(s.alphas, 6));
  }
}

TEST_CASE("moment functional and orthogonality helpers") {
  const MomentFunctional<Rational> l{std::vector<Q>{2, 3, 5}, "x"};
  CHECK(l(UPoly<Rational>(Q(1))) == Q(2));
  CHECK(l(UPoly<Rational>::linear(1, 1).scaled(Q(2))) == Q(10));
  CHECK(throws(Errc::kDegreeExceedsMoments, [&] { l(UPoly<Rational>::monomial(3, 1)); }));
  // shift by 0 is the identity; shift and unshift round-trip
  const auto g = genocchi_functional(10);
  CHECK(shift_moments(g, Q(0)).moments == g.moments);
  CHECK(shift_moments(shift_moments(g, Q(3, 4)), Q(-3, 4)).moments == g.moments);
  // newton_expand: x = (x + a0) - a0
  CHECK(newton_expand<Rational>(1, {Q(5)}) == std::vector<Q>{Q(-5), Q(1)});
  // v = (1, 0, 0, ...) gives 1/(1 + a0 t)
  CHECK(moment_ogf<Rational>({Q(1), Q(0), Q(0), Q(0)}, {Q(2), Q(3), Q(4), Q(5)}).coeffs() ==
        std::vector<Q>{1, -2, 4, -8});
  ThreeTermRecurrence<Rational> rec;
  rec.b = {Q(3)};
  CHECK(monic_polys(rec, 1)[1] == UPoly<Rational>::linear(-3, 1));
}

TEST_CASE("median Genocchi numbers through shifted moments") {
  // Frozen values of H_1..H_13 (H_9 = 56).
  std::vector<Q> h;
  for (long n = 0; n <= 6; ++n) h.push_back(median_genocchi(n));
  CHECK(h == std::vector<Q>{1, 1, 2, 8, 56, 608, 9440});
}
