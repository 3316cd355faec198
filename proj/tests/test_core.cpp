#include <doctest.h>

#include "momentcf/error.hpp"
#include "momentcf/mpoly.hpp"
#include "momentcf/pochhammer.hpp"
#include "momentcf/rational.hpp"
#include "momentcf/series.hpp"
#include "momentcf/upoly.hpp"
#include "oracles.hpp"

using namespace momentcf;
using Q = Rational;
using S = TruncSeries<Rational>;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::kInvalidArgument;
}

S series(std::vector<Q> c) { return S(std::move(c)); }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(Q::parse("3/6") == Q(1, 2));
  CHECK(Q::parse("-4") == Q(-4));
  CHECK(Q::parse(" 7/-14 ").to_string() == "-1/2");
  CHECK(Q(6, 3).to_string() == "2");
  CHECK(Q(-2, 4).to_string() == "-1/2");
  CHECK(code_of([] { Q::parse("1/0"); }) == Errc::kDivisionByZero);
  CHECK(code_of([] { Q::parse("x"); }) == Errc::kParse);
  CHECK(code_of([] { Q::parse("1.5"); }) == Errc::kParse);
  CHECK(code_of([] { (void)(Q(1) / Q(0)); }) == Errc::kDivisionByZero);
  CHECK(code_of([] { (void)Q(0).inverse(); }) == Errc::kDivisionByZero);
}

TEST_CASE("rational arithmetic") {
  CHECK(Q(1, 2) + Q(1, 3) == Q(5, 6));
  CHECK(Q(1, 2) * Q(2, 3) == Q(1, 3));
  CHECK(Q(2, 3).pow(-2) == Q(9, 4));
  CHECK(Q(-3, 5).abs() == Q(3, 5));
  CHECK(Q(1, 3) < Q(1, 2));
  CHECK(factorial(10) == Q(3628800));
  CHECK(Q(12).to_long() == 12);
  CHECK_FALSE(Q(1, 2).to_long());
}

TEST_CASE("pochhammer symbols and binomials") {
  CHECK(pochhammer(Q(5, 7), 0) == Q(1));
  CHECK(pochhammer(Q(1), 4) == Q(24));
  CHECK(pochhammer(Q(1, 2), 3) == Q(15, 8));
  CHECK(qpochhammer(Q(2, 9), Q(1, 3), 0) == Q(1));
  CHECK(qpochhammer(Q(1), Q(1, 5), 2) == Q(0));
  CHECK(qpochhammer(Q(1, 2), Q(1, 3), 2) == Q(5, 12));
  CHECK(binomial(4L, 2L) == Q(6));
  CHECK(binomial(7L, 0L) == Q(1));
  CHECK(binomial(3L, 5L) == Q(0));
  CHECK(binomial(-2L, 3L) == Q(-4));
  CHECK(binomial(Q(1, 2), 2) == Q(-1, 8));
  CHECK(code_of([] { pochhammer(Q(1), -1); }) == Errc::kInvalidArgument);
}

TEST_CASE("multivariate polynomials") {
  const auto g = MPoly::generators({"a", "b"});
  const MPoly& a = g[0];
  const MPoly& b = g[1];
  const MPoly p = (a + b).pow(3);
  CHECK(p.term_count() == 4);
  const std::vector<unsigned> a2b{2, 1};
  CHECK(p.coefficient(a2b) == Q(3));
  const std::vector<Q> point{Q(1, 2), Q(-3)};
  CHECK(p.eval(point) == Q(-125, 8));
  CHECK((a * a - b * b) == (a - b) * (a + b));
  CHECK(p.substitute("b", MPoly(Q(0))) == a.pow(3));
  CHECK((a * Q(2) - a - a).is_zero());
  CHECK(MPoly(Q(3, 4)).to_string() == "3/4");
  CHECK(inverse(MPoly(Q(2))) == MPoly(Q(1, 2)));
  CHECK(code_of([&] { inverse(a); }) == Errc::kNotInvertible);
}

TEST_CASE("univariate polynomials") {
  using P = UPoly<Rational>;
  const P p = P::linear(Q(1), Q(1)) * P::linear(Q(-2), Q(1));  // x² - x - 2
  CHECK(p.degree() == 2);
  CHECK(p.eval(Q(2)) == Q(0));
  const auto [quotient, remainder] = p.divide_linear(Q(1));
  CHECK(quotient == P::linear(Q(-2), Q(1)));
  CHECK(remainder == Q(0));
  CHECK(P().degree() == -1);
  CHECK(newton_basis<Rational>({Q(1), Q(2)}, 2) == P(std::vector<Q>{Q(2), Q(3), Q(1)}));
}

TEST_CASE("truncated series basics") {
  const S one_minus_t = series({Q(1), Q(-1), Q(0), Q(0)});
  CHECK(reciprocal(one_minus_t) == series({Q(1), Q(1), Q(1), Q(1)}));
  CHECK(exp(S::monomial(1, Q(1), 3)) == series({Q(1), Q(1), Q(1, 2), Q(1, 6)}));
  CHECK(compose(S::geometric(Q(1), 2), S::monomial(1, Q(2), 2)) == series({Q(1), Q(2), Q(4)}));
  CHECK(egf_transform(S::geometric(Q(1), 4)) == series({Q(1), Q(1), Q(1, 2), Q(1, 6), Q(1, 24)}));
  CHECK(egf_inverse(egf_transform(S::geometric(Q(3, 2), 6))) == S::geometric(Q(3, 2), 6));
  CHECK(code_of([] { reciprocal(S::monomial(1, Q(1), 3)); }) == Errc::kNonInvertibleConstantTerm);
  CHECK(code_of([] { compose(S::geometric(Q(1), 3), S::constant(Q(1), 3)); }) ==
        Errc::kNonzeroConstantTermInComposition);
}

TEST_CASE("epsilon transform instances") {
  // eps(t/(1-t)) = e^t - 1
  const std::size_t order = 8;
  const S lhs = egf_transform(S::monomial(1, Q(1), order) * S::geometric(Q(1), order));
  S expm1 = exp_linear(Q(1), order);
  expm1[0] = Q(0);
  CHECK(lhs == expm1);
  // eps(t²/(1-t²)) = (2 sinh(t/2))²/2 = (e^t + e^{-t} - 2)/2, order 4
  const S l2 = egf_transform(S::monomial(2, Q(1), 4) * reciprocal(series({Q(1), Q(0), Q(-1), Q(0), Q(0)})));
  const S r2 = (exp_linear(Q(1), 4) + exp_linear(Q(-1), 4) - S::constant(Q(2), 4)).scaled(Q(1, 2));
  CHECK(l2 == r2);
}

TEST_CASE("hypergeometric truncation") {
  // 2F1(1,1;2;t) = sum t^n/(n+1)
  const S h = hyper_series<Rational>({Q(1), Q(1)}, {Q(2)}, S::monomial(1, Q(1), 6));
  for (std::size_t n = 0; n <= 6; ++n) CHECK(h[n] == Q(1, static_cast<long>(n + 1)));
  const S zero_arg(5);
  CHECK(hyper_series<Rational>({Q(2), Q(3), Q(5)}, {Q(10), Q(1, 2)}, zero_arg) == S::constant(Q(1), 5));
  CHECK(code_of([] { hyper_coefficients<Rational>({Q(1)}, {Q(-2)}, 5); }) == Errc::kDenominatorParameterPole);
  // A terminating numerator parameter stops the series even past the pole.
  CHECK(hyper_coefficients<Rational>({Q(-1)}, {Q(-2)}, 5).size() == 6);
}

TEST_CASE("trigonometric arguments match the oracle") {
  CHECK(trig_arg(TrigArg::kSinHalfSquared, 4).coeffs() == std::vector<Q>{0, 0, Q(1, 4), 0, Q(-1, 48)});
  CHECK(trig_arg(TrigArg::kTwoSinHalf, 3).coeffs() == std::vector<Q>{0, 1, 0, Q(-1, 24)});
  CHECK(trig_arg(TrigArg::kOneMinusExpNeg, 3).coeffs() == std::vector<Q>{0, 1, Q(-1, 2), Q(1, 6)});
  CHECK(trig_arg(TrigArg::kSinHalfSquared, 14).coeffs() == oracle::sin_half_squared(14));
  CHECK(trig_arg(TrigArg::kTwoSinHalf, 15).coeffs() == oracle::two_sin_half(15));
}
