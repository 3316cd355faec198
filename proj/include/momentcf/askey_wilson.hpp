#pragma once

#include <vector>

#include "momentcf/moments.hpp"
#include "momentcf/rational.hpp"
#include "momentcf/series.hpp"
#include "momentcf/upoly.hpp"

namespace momentcf {

struct AWParams {
  Rational q, a, b, c, d;

  /// Error(kParameterPole) unless a, q are nonzero and (abcd; q)_k, (ab, ac, ad; q)_k
  /// stay nonzero for k <= depth.
  void validate(std::size_t depth) const;
};

/// a_j = (q^{-j}/a + a q^j)/2
Rational aw_node(const AWParams& p, long j);

/// v_k = (ab, ac, ad; q)_k/(abcd; q)_k · (-1)^k (2a)^{-k} q^{-C(k,2)}, the
/// functional applied to (x - a_0)···(x - a_{k-1}).
std::vector<Rational> aw_basis_values(const AWParams& p, std::size_t order);

/// Moments from the generating function in u.
std::vector<Rational> aw_moments_series(const AWParams& p, std::size_t n);

/// Moments from the Newton expansion of x^n in the nodes a_j.
std::vector<Rational> aw_moments_newton(const AWParams& p, std::size_t n);

Rational aw_moment(const AWParams& p, std::size_t n);

MomentFunctional<Rational> aw_functional(const AWParams& p, std::size_t n);

/// (sz, s/z; q)_n = prod_{j<n} (1 - 2 s q^j x + s² q^{2j}) as a polynomial in x.
UPoly<Rational> aw_pair_product(const Rational& s, const Rational& q, std::size_t n);

/// (ab, ac, ad; q)_n / (abcd; q)_n
Rational aw_linfunc_value(const AWParams& p, std::size_t n);

/// (ab; q)_{m+n} (ac, ad; q)_n (bc, bd; q)_m / (abcd; q)_{m+n}
Rational aw_mixed_value(const AWParams& p, std::size_t n, std::size_t m);

/// p_n(x) = (ab, ac, ad; q)_n a^{-n} 4phi3(q^{-n}, abcd q^{n-1}, az, a/z; ab, ac, ad; q, q).
UPoly<Rational> aw_poly(const AWParams& p, std::size_t n);

}  // namespace momentcf
