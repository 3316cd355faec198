#pragma once

#include <vector>

#include "momentcf/contfrac.hpp"
#include "momentcf/moments.hpp"
#include "momentcf/rational.hpp"
#include "momentcf/series.hpp"
#include "momentcf/upoly.hpp"

namespace momentcf {

/// Hahn parameters in the (A, B, C) form, where L((x+A)_m) = (A)_m (B)_m / (C)_m.
struct HahnParams {
  Rational A, B, C;
};

/// The original (alpha, beta, N) parametrization: A = alpha+1,
/// B = alpha+beta+N+2, C = alpha+beta+2.
struct HahnOriginal {
  Rational alpha, beta, N;

  HahnParams to_abc() const;
  static HahnOriginal from_abc(const HahnParams& p);
};

/// v_n = L((x+A)_n) = (A)_n (B)_n / (C)_n for n = 0..order.
std::vector<Rational> hahn_basis_values(const HahnParams& p, std::size_t order);

/// M_0..M_n via the Newton expansion of x^n in the nodes A, A+1, ...
std::vector<Rational> hahn_moments_newton(const HahnParams& p, std::size_t n);

/// M_0..M_n as coefficients of the moment generating function.
std::vector<Rational> hahn_moments_ogf(const HahnParams& p, std::size_t n);

/// M_0..M_n; the two routes above must agree, Error(kInvalidArgument) if not.
std::vector<Rational> hahn_moments(const HahnParams& p, std::size_t n);

MomentFunctional<Rational> hahn_functional(const HahnParams& p, std::size_t n);

/// R_n(x) = sum_k (-n)_k (n+C-1)_k (-x)_k / (k! (A)_k (C-B)_k).
UPoly<Rational> hahn_poly(const HahnParams& p, std::size_t n);

/// Closed form of L(R_n (x+A)_m).
Rational hahn_triangle_value(const HahnParams& p, std::size_t n, std::size_t m);

/// Closed form of L((x+A)_m (-x)_n).
Rational hahn_mixed_value(const HahnParams& p, std::size_t m, std::size_t n);

/// Closed form of L(R_n²).
Rational hahn_norm(const HahnParams& p, std::size_t n);

/// The closed-form S-fraction coefficients of the moment series.
SFrac<Rational> hahn_sfrac(const HahnParams& p, std::size_t depth);

/// alpha_{2n-1} (n >= 2) with the denominator (C+n)(C+n+1) that appears in
/// the derivation, kept for comparison with the closed form.
Rational hahn_alt_odd_alpha(const HahnParams& p, long n);

/// Auxiliary coefficients C_1, C_2, ... of G(t; A, B, C) = S(t; C_1, C_2, ...).
SFrac<Rational> hahn_aux_sfrac(const HahnParams& p, std::size_t depth);

/// G(t) = sum_n (A)_n (B)_n/(C)_n t^n / prod_{l<=n} (1 + l t).
TruncSeries<Rational> hahn_aux_series(const HahnParams& p, std::size_t order);

/// e^{-At} 2F1(A, B; C; 1 - e^{-t}).
TruncSeries<Rational> hahn_egf_closed(const HahnParams& p, std::size_t order);

/// 2F1(A, C-B; C; 1 - e^t).
TruncSeries<Rational> hahn_egf_pfaff(const HahnParams& p, std::size_t order);

/// (beta+1)_N/(alpha+beta+2)_N · 2F1(alpha+1, -N; -beta-N; e^t) as a finite sum
/// of exponentials. Error(kNonIntegerN) unless N = B - C is a nonnegative integer.
TruncSeries<Rational> hahn_egf_terminating(const HahnParams& p, std::size_t order);

/// N!/(alpha+beta+2)_N · sum_{x=0}^N C(alpha+x, x) C(beta+N-x, N-x) x^n for n <= order.
std::vector<Rational> hahn_finite_sum_moments(const HahnParams& p, std::size_t order);

}  // namespace momentcf
