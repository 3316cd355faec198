#pragma once

#include <vector>

#include "momentcf/cdh.hpp"
#include "momentcf/contfrac.hpp"
#include "momentcf/mpoly.hpp"
#include "momentcf/pochhammer.hpp"
#include "momentcf/series.hpp"
#include "momentcf/upoly.hpp"

namespace momentcf {

/// The six parameters of the generalized Dumont-Foata polynomials.
template <class R>
struct DumontFoataParams {
  R alpha, alpha_bar, beta, beta_bar, gamma, gamma_bar;

  /// Indeterminates alpha, alpha_bar, beta, beta_bar, gamma, gamma_bar.
  static DumontFoataParams symbolic() {
    auto g = MPoly::generators({"alpha", "alpha_bar", "beta", "beta_bar", "gamma", "gamma_bar"});
    return {g[0], g[1], g[2], g[3], g[4], g[5]};
  }
};

/// The diagonal coefficient at shift k:
/// (alpha+k)(beta_bar-beta) - (alpha_bar+k)(gamma_bar-gamma) - (alpha+k)(alpha_bar+k).
template <class R>
R df_diagonal(const DumontFoataParams<R>& p, long k) {
  const R ak = p.alpha + R(k);
  const R abk = p.alpha_bar + R(k);
  return ak * (p.beta_bar - p.beta) - abk * (p.gamma_bar - p.gamma) - ak * abk;
}

/// Gamma_1..Gamma_n from the shift recurrence
///   Gamma_{m+1}(alpha, alpha_bar) = (alpha+gamma_bar)(beta+alpha_bar) Gamma_m(alpha+1, alpha_bar+1)
///                                   + diagonal(0) Gamma_m(alpha, alpha_bar).
template <class R>
std::vector<R> dumont_foata(const DumontFoataParams<R>& p, std::size_t n) {
  if (n == 0) return {};
  std::vector<R> row(n, R(1));  // Gamma_1 at shifts 0..n-1
  std::vector<R> out{R(1)};
  for (std::size_t m = 1; m < n; ++m) {
    std::vector<R> next(n - m);
    for (std::size_t k = 0; k < next.size(); ++k) {
      const long kk = static_cast<long>(k);
      next[k] = (p.alpha + p.gamma_bar + R(kk)) * (p.beta + p.alpha_bar + R(kk)) * row[k + 1] +
                df_diagonal(p, kk) * row[k];
    }
    row = std::move(next);
    out.push_back(row[0]);
  }
  return out;
}

template <class R>
JFrac<R> df_jfrac(const DumontFoataParams<R>& p, std::size_t depth) {
  JFrac<R> j;
  for (std::size_t i = 0; i < depth; ++i) {
    const R n(static_cast<long>(i));
    j.gammas.push_back((p.alpha + n) * (p.beta_bar + n) + (p.beta + n) * (p.gamma_bar + n) +
                       (p.gamma + n) * (p.alpha_bar + n) - n * (n + R(1)));
    if (i + 1 < depth) {
      j.betas.push_back((n + R(1)) * (p.alpha_bar + p.beta + n) * (p.beta_bar + p.gamma + n) *
                        (p.gamma_bar + p.alpha + n));
    }
  }
  return j;
}

/// sum_n (alpha+gamma_bar)_n (beta+alpha_bar)_n t^n / prod_{k<=n}(1 - diagonal(k) t).
template <class R>
TruncSeries<R> df_ogf(const DumontFoataParams<R>& p, std::size_t order) {
  std::vector<R> values;
  std::vector<R> nodes;
  for (std::size_t n = 0; n <= order; ++n) {
    const long nn = static_cast<long>(n);
    values.push_back(pochhammer(p.alpha + p.gamma_bar, nn) * pochhammer(p.beta + p.alpha_bar, nn));
    nodes.push_back(-df_diagonal(p, nn));
  }
  return moment_ogf(values, nodes);
}

/// Continuous dual Hahn parameters and shift d with Gamma_{n+1} = moments of p_n(x+d; a,b,c).
template <class R>
struct DfCdhSubstitution {
  CdhParams<R> cdh;
  R d;
};

template <class R>
DfCdhSubstitution<R> df_to_cdh(const DumontFoataParams<R>& p) {
  const Rational half(1, 2);
  const R a = (p.alpha + p.alpha_bar + p.beta - p.beta_bar + p.gamma_bar - p.gamma) * half;
  const R b = (p.alpha_bar - p.alpha + p.beta + p.beta_bar + p.gamma - p.gamma_bar) * half;
  const R c = (p.alpha - p.alpha_bar - p.beta + p.beta_bar + p.gamma + p.gamma_bar) * half;
  const R d = p.alpha * p.alpha_bar + p.alpha * (p.beta - p.beta_bar) - p.alpha_bar * (p.gamma - p.gamma_bar) - a * a;
  return {{a, b, c}, d};
}

/// Z_n from the explicit sum, whose product factors are
/// x + (alpha+l)(alpha_bar+l) + (alpha+l)(beta-beta_bar) - (alpha_bar+l)(gamma-gamma_bar).
template <class R>
UPoly<R> z_explicit(const DumontFoataParams<R>& p, std::size_t n) {
  const long nn = static_cast<long>(n);
  UPoly<R> out;
  UPoly<R> basis(R(1));
  for (long k = 0; k <= nn; ++k) {
    R coeff = R(binomial(nn, k)) * pochhammer(p.alpha_bar + p.beta + R(k), nn - k) *
              pochhammer(p.alpha + p.gamma_bar + R(k), nn - k);
    if ((nn - k) % 2 != 0) coeff = -coeff;
    out += basis.scaled(coeff);
    const R al = p.alpha + R(k);
    const R abl = p.alpha_bar + R(k);
    basis *= UPoly<R>::linear(al * abl + al * (p.beta - p.beta_bar) - abl * (p.gamma - p.gamma_bar), R(1));
  }
  return out;
}

/// Z_0..Z_n from the monic recurrence with
///   b_n = (n+alpha)(n+beta_bar) + (n+alpha_bar)(n+gamma) + (n+beta)(n+gamma_bar) - n(n+1),
///   lambda_n = n(n-1+alpha_bar+beta)(n-1+alpha+gamma_bar)(n-1+beta_bar+gamma).
template <class R>
std::vector<UPoly<R>> z_recurrence(const DumontFoataParams<R>& p, std::size_t n) {
  ThreeTermRecurrence<R> rec;
  for (std::size_t i = 0; i < n; ++i) {
    const R k(static_cast<long>(i));
    rec.b.push_back((k + p.alpha) * (k + p.beta_bar) + (k + p.alpha_bar) * (k + p.gamma) +
                    (k + p.beta) * (k + p.gamma_bar) - k * (k + R(1)));
    if (i > 0) {
      rec.lambda.push_back(k * (k - R(1) + p.alpha_bar + p.beta) * (k - R(1) + p.alpha + p.gamma_bar) *
                           (k - R(1) + p.beta_bar + p.gamma));
    }
  }
  return monic_polys(rec, n);
}

/// psi(Z_n²) = n! (alpha_bar+beta)_n (alpha+gamma_bar)_n (beta_bar+gamma)_n.
template <class R>
R z_norm(const DumontFoataParams<R>& p, std::size_t n) {
  const long nn = static_cast<long>(n);
  return R(factorial(nn)) * pochhammer(p.alpha_bar + p.beta, nn) * pochhammer(p.alpha + p.gamma_bar, nn) *
         pochhammer(p.beta_bar + p.gamma, nn);
}

}  // namespace momentcf
