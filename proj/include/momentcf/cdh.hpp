#pragma once

#include <vector>

#include "momentcf/contfrac.hpp"
#include "momentcf/moments.hpp"
#include "momentcf/pochhammer.hpp"
#include "momentcf/upoly.hpp"

namespace momentcf {

/// Parameters of the continuous dual Hahn polynomials p_n(x²; a, b, c).
template <class R>
struct CdhParams {
  R a, b, c;
};

/// mu_0..mu_n from mu_{n+1}(a) = (a+b)(a+c) mu_n(a+1) - a² mu_n(a), mu_0 = 1.
template <class R>
std::vector<R> cdh_moments(const CdhParams<R>& p, std::size_t n) {
  std::vector<R> row(n + 1, R(1));
  std::vector<R> out{R(1)};
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<R> next(n - m);
    for (std::size_t k = 0; k < next.size(); ++k) {
      const R ak = p.a + R(static_cast<long>(k));
      next[k] = (ak + p.b) * (ak + p.c) * row[k + 1] - ak * ak * row[k];
    }
    row = std::move(next);
    out.push_back(row[0]);
  }
  return out;
}

template <class R>
R cdh_moment(const CdhParams<R>& p, std::size_t n) {
  return cdh_moments(p, n).back();
}

template <class R>
MomentFunctional<R> cdh_functional(const CdhParams<R>& p, std::size_t n) {
  return {cdh_moments(p, n), "y"};
}

/// prod_{l<k} ((shift+l)² + y)
template <class R>
UPoly<R> shifted_square_product(const R& shift, std::size_t k) {
  UPoly<R> out(R(1));
  for (std::size_t l = 0; l < k; ++l) {
    const R sl = shift + R(static_cast<long>(l));
    out *= UPoly<R>::linear(sl * sl, R(1));
  }
  return out;
}

/// p_n(y) = sum_k (-1)^{n-k} C(n,k) (a+b+k)_{n-k} (a+c+k)_{n-k} prod_{l<k}((a+l)²+y),
/// the terminating 3F2 with (a±ix)_k written in y = x².
template <class R>
UPoly<R> cdh_poly(const CdhParams<R>& p, std::size_t n) {
  const long nn = static_cast<long>(n);
  UPoly<R> out;
  UPoly<R> basis(R(1));
  for (long k = 0; k <= nn; ++k) {
    R coeff = R(binomial(nn, k)) * pochhammer(p.a + p.b + R(k), nn - k) * pochhammer(p.a + p.c + R(k), nn - k);
    if ((nn - k) % 2 != 0) coeff = -coeff;
    out += basis.scaled(coeff);
    const R ak = p.a + R(k);
    basis *= UPoly<R>::linear(ak * ak, R(1));
  }
  return out;
}

/// b_n = (a+n)(b+n) + (b+n)(c+n) + (c+n)(a+n) - n(n+1),
/// beta_{n+1} = (n+1)(a+b+n)(b+c+n)(c+a+n).
template <class R>
JFrac<R> cdh_jfrac(const CdhParams<R>& p, std::size_t depth) {
  JFrac<R> j;
  for (std::size_t i = 0; i < depth; ++i) {
    const R n(static_cast<long>(i));
    const R an = p.a + n, bn = p.b + n, cn = p.c + n;
    j.gammas.push_back(an * bn + bn * cn + cn * an - n * (n + R(1)));
    if (i + 1 < depth) j.betas.push_back((n + R(1)) * (p.a + p.b + n) * (p.b + p.c + n) * (p.c + p.a + n));
  }
  return j;
}

/// The a = 0 S-fraction: alpha_{2n+1} = (b+n)(c+n), alpha_{2n+2} = (n+1)(b+c+n).
template <class R>
SFrac<R> cdh_a0_sfrac(const R& b, const R& c, std::size_t depth) {
  SFrac<R> s;
  for (std::size_t i = 0; i < depth; ++i) {
    const R n(static_cast<long>(i / 2));
    s.alphas.push_back(i % 2 == 0 ? (b + n) * (c + n) : (n + R(1)) * (b + c + n));
  }
  return s;
}

/// L(p_n²) = n! (a+b)_n (a+c)_n (b+c)_n.
template <class R>
R cdh_norm(const CdhParams<R>& p, std::size_t n) {
  const long nn = static_cast<long>(n);
  return R(factorial(nn)) * pochhammer(p.a + p.b, nn) * pochhammer(p.a + p.c, nn) * pochhammer(p.b + p.c, nn);
}

}  // namespace momentcf
