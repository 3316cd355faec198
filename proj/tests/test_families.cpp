#include <doctest.h>

#include "momentcf/askey_wilson.hpp"
#include "momentcf/cdh.hpp"
#include "momentcf/dumont_foata.hpp"
#include "momentcf/hahn.hpp"
#include "momentcf/sequences.hpp"
#include "momentcf/wilson.hpp"
#include "oracles.hpp"

using namespace momentcf;
using Q = Rational;

namespace {

bool throws(Errc code, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

const AWParams kPoint{Q(1, 2), Q(1, 3), Q(1, 5), Q(1, 7), Q(1, 11)};

}  // namespace

TEST_CASE("number sequences against the Bernoulli oracle") {
  const auto b = oracle::bernoulli(30);
  CHECK(bernoulli_numbers(30) == b);
  CHECK(bernoulli(12) == Q(-691, 2730));
  CHECK(bernoulli(1) == Q(-1, 2));
  for (long m = 2; m <= 30; m += 2) CHECK(genocchi(m) == oracle::genocchi(m, b));
  CHECK(throws(Errc::kOddIndex, [] { genocchi(3); }));
  CHECK(throws(Errc::kOddIndex, [] { genocchi(0); }));
}

TEST_CASE("continuous dual Hahn moments") {
  CHECK(cdh_moments(CdhParams<Rational>{1, 1, 1}, 5) == std::vector<Q>{1, 3, 17, 155, 2073, 38227});
  CHECK(cdh_moments(CdhParams<Rational>{0, 1, 1}, 5) == std::vector<Q>{1, 1, 3, 17, 155, 2073});
  const auto shifted = shift_moments(cdh_functional(CdhParams<Rational>{Q(1, 2), Q(1, 2), Q(1, 2)}, 6), Q(-1, 4));
  CHECK(shifted.moments == std::vector<Q>{1, 1, 2, 8, 56, 608, 9440});
  const auto g = MPoly::generators({"a", "b", "c"});
  const CdhParams<MPoly> sym{g[0], g[1], g[2]};
  CHECK(cdh_poly(sym, 1) == UPoly<MPoly>::linear(-(g[0] * g[1] + g[1] * g[2] + g[2] * g[0]), MPoly(1)));
  CHECK(cdh_moment(sym, 1) == g[0] * g[1] + g[1] * g[2] + g[2] * g[0]);
}

TEST_CASE("Wilson moments") {
  const WilsonParams p{Q(1, 3), Q(2, 5), Q(-1, 2), Q(3)};
  const auto w = wilson_moments(p, 4);
  CHECK(w[0] == Q(1));
  CHECK(w[1] == (p.a + p.b) * (p.a + p.c) * (p.a + p.d) / p.sum() - p.a * p.a);
  CHECK(cf_to_series(wilson_jfrac(p, 1), 1).coeffs() == std::vector<Q>{Q(1), w[1]});
  CHECK(throws(Errc::kParameterPole, [] { wilson_moments({Q(1), Q(-1), Q(1, 2), Q(-1, 2)}, 2); }));
  // at a = 0 the S-fraction coefficients invert the moments
  const WilsonParams z{Q(0), Q(2, 3), Q(5, 4), Q(-1, 6)};
  CHECK(series_to_sfrac(wilson_functional(z, 6)).alphas == wilson_a0_sfrac(z.b, z.c, z.d, 6).alphas);
  // w_1(0) = bcd/(b+c+d)
  CHECK(wilson_moments(z, 1)[1] == z.b * z.c * z.d / (z.b + z.c + z.d));
}

TEST_CASE("Hahn moments") {
  const auto b = oracle::bernoulli(21);
  CHECK(hahn_moments({1, 1, 2}, 20) == std::vector<Q>(b.begin(), b.begin() + 21));
  CHECK(hahn_moments({1, 1, 2}, 4) == std::vector<Q>{1, Q(-1, 2), Q(1, 6), 0, Q(-1, 30)});
  const HahnParams p{Q(2, 3), Q(5, 7), Q(11, 5)};
  CHECK(hahn_moments_newton(p, 8) == hahn_moments_ogf(p, 8));
  CHECK(hahn_poly(p, 1) == UPoly<Rational>::linear(1, p.C / (p.A * (p.C - p.B))));
  CHECK(hahn_norm(p, 1) == -p.B * (p.C - p.A) / (p.A * (p.C - p.B) * (p.C + 1)));
  const auto s = hahn_sfrac({1, 1, 2}, 2);
  CHECK(s.alphas == std::vector<Q>{Q(-1, 2), Q(1, 6)});
  CHECK(series_to_jfrac(hahn_functional({1, 1, 2}, 3)).gammas.front() == Q(-1, 2));
  CHECK(throws(Errc::kNonIntegerN, [] { hahn_egf_terminating({1, Q(5, 2), 2}, 4); }));
}

TEST_CASE("Hahn parametrization bridge") {
  const HahnOriginal o{Q(1, 2), Q(2, 3), Q(4)};
  const auto abc = o.to_abc();
  CHECK(abc.A == Q(3, 2));
  CHECK(abc.C == Q(1, 2) + Q(2, 3) + Q(2));
  CHECK(abc.B - abc.C == Q(4));
  const auto back = HahnOriginal::from_abc(abc);
  CHECK(back.alpha == o.alpha);
  CHECK(back.beta == o.beta);
  CHECK(back.N == o.N);
}

TEST_CASE("Dumont-Foata polynomials") {
  const auto p = DumontFoataParams<MPoly>::symbolic();
  const auto g = dumont_foata(p, 3);
  CHECK(g[0] == MPoly(1));
  CHECK(g[1] == p.alpha * p.beta_bar + p.beta * p.gamma_bar + p.gamma * p.alpha_bar);
  CHECK(cf_to_series(df_jfrac(p, 1), 1).coeffs() == std::vector<MPoly>{g[0], g[1]});
  // Gamma_{n+1}(1,1,1,0,1,1) = H_{2n+3}
  CHECK(dumont_foata(DumontFoataParams<Rational>{1, 1, 1, 0, 1, 1}, 6) == std::vector<Q>{1, 2, 8, 56, 608, 9440});
}

TEST_CASE("Askey-Wilson moments") {
  const auto m = aw_moments_series(kPoint, 8);
  CHECK(m[0] == Q(1));
  const Q a = kPoint.a, bb = kPoint.b, c = kPoint.c, d = kPoint.d;
  CHECK(m[1] == (Q(1) + a * a - (Q(1) - a * bb) * (Q(1) - a * c) * (Q(1) - a * d) / (Q(1) - a * bb * c * d)) / (Q(2) * a));
  CHECK(m == aw_moments_newton(kPoint, 8));
  CHECK(aw_moment(kPoint, 3) == m[3]);
  const auto functional = aw_functional(kPoint, 4);
  CHECK(functional(aw_poly(kPoint, 0) * aw_poly(kPoint, 0)) == Q(1));
  CHECK(functional(aw_poly(kPoint, 1)) == Q(0));
  CHECK(functional(aw_poly(kPoint, 1) * aw_poly(kPoint, 2)) == Q(0));
  CHECK(aw_linfunc_value(kPoint, 0) == Q(1));
  CHECK(throws(Errc::kParameterPole, [] { AWParams{Q(1, 2), Q(0), Q(1), Q(1), Q(1)}.validate(2); }));
}
