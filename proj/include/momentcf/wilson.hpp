#pragma once

#include <vector>

#include "momentcf/contfrac.hpp"
#include "momentcf/moments.hpp"
#include "momentcf/rational.hpp"
#include "momentcf/series.hpp"
#include "momentcf/upoly.hpp"

namespace momentcf {

struct WilsonParams {
  Rational a, b, c, d;

  Rational sum() const { return a + b + c + d; }
};

/// w_0..w_n from the shift recurrence
///   w_{n+1}(a) = (a+b)(a+c)(a+d)/(a+b+c+d) w_n(a+1) - a² w_n(a).
/// Error(kParameterPole) if some a+b+c+d+k vanishes.
std::vector<Rational> wilson_moments(const WilsonParams& p, std::size_t n);
Rational wilson_moment(const WilsonParams& p, std::size_t n);

/// Moments as a functional in y = x².
MomentFunctional<Rational> wilson_functional(const WilsonParams& p, std::size_t n);

/// sum_n (a+b)_n(a+c)_n(a+d)_n t^n / [(a+b+c+d)_n prod_{l<=n}(1+(a+l)²t)].
TruncSeries<Rational> wilson_ogf(const WilsonParams& p, std::size_t order);

Rational wilson_A(const WilsonParams& p, long n);
Rational wilson_C(const WilsonParams& p, long n);

/// J-fraction with b_n = A_n + C_n - a² and lambda_n = A_{n-1} C_n.
JFrac<Rational> wilson_jfrac(const WilsonParams& p, std::size_t depth);

/// The closed-form S-fraction of the a = 0 moments.
SFrac<Rational> wilson_a0_sfrac(const Rational& b, const Rational& c, const Rational& d, std::size_t depth);

/// prod_{l<k} ((shift+l)² + y), the real form of (shift+ix)_k (shift-ix)_k.
UPoly<Rational> conjugate_pair_product(const Rational& shift, std::size_t k);

/// Monic Wilson polynomial W_n(y) from its terminating 4F3 sum.
UPoly<Rational> wilson_poly(const WilsonParams& p, std::size_t n);

/// The diagonal L(W_n²) of the orthogonality relation.
Rational wilson_norm(const WilsonParams& p, std::size_t n);

}  // namespace momentcf
