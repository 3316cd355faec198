#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "momentcf/error.hpp"
#include "momentcf/moments.hpp"
#include "momentcf/rational.hpp"
#include "momentcf/series.hpp"
#include "momentcf/upoly.hpp"

namespace momentcf {

/// S(t; alpha_1, alpha_2, ...) = 1/(1 - alpha_1 t/(1 - alpha_2 t/(1 - ...))).
/// `terminates` marks a finite fraction: every later alpha is zero.
template <class R>
struct SFrac {
  std::vector<R> alphas;
  bool terminates = false;

  std::size_t depth() const { return alphas.size(); }
  /// Highest power of t whose coefficient the stored prefix determines.
  std::optional<std::size_t> determined_order() const {
    if (terminates) return std::nullopt;
    return alphas.size();
  }
};

/// J(t; gamma_0, beta_1, gamma_1, ...) =
///   1/(1 - gamma_0 t - beta_1 t^2/(1 - gamma_1 t - beta_2 t^2/(1 - ...))).
template <class R>
struct JFrac {
  std::vector<R> gammas;
  std::vector<R> betas;
  bool terminates = false;

  std::size_t depth() const { return gammas.size(); }
  void validate() const {
    if (gammas.empty()) throw Error(Errc::kInvalidArgument, "a J-fraction needs at least gamma_0");
    if (betas.size() + 1 != gammas.size()) {
      throw Error(Errc::kInvalidArgument, "a J-fraction needs exactly one beta fewer than gammas");
    }
  }
  std::optional<std::size_t> determined_order() const {
    if (terminates) return std::nullopt;
    return 2 * gammas.size() - 1;
  }
  ThreeTermRecurrence<R> recurrence() const { return {gammas, betas}; }
};

namespace detail {

template <class R>
TruncSeries<R> invert_denominator(const TruncSeries<R>& denominator) {
  try {
    return reciprocal(denominator);
  } catch (const Error&) {
    throw Error(Errc::kNonInvertibleDenominator, "continued-fraction denominator has a non-unit constant term");
  }
}

inline void require_order(std::optional<std::size_t> determined, std::size_t order, const std::string& what) {
  if (determined && *determined < order) {
    throw Error(Errc::kInsufficientDepth, what + " determines coefficients only through t^" +
                                              std::to_string(*determined) + ", order " + std::to_string(order) +
                                              " requested");
  }
}

}  // namespace detail

/// Expansion by bottom-up truncated evaluation. Level k of an S-fraction only
/// matters modulo t^{order-k+1}, so each tail is kept at that precision.
template <class R>
TruncSeries<R> cf_to_series(const SFrac<R>& s, std::size_t order) {
  detail::require_order(s.determined_order(), order, "S-fraction of depth " + std::to_string(s.depth()));
  const std::size_t levels = std::min(s.depth(), order);
  // tail = S_k, the fraction starting at alpha_{k+1}, truncated at order - k
  TruncSeries<R> tail = TruncSeries<R>::constant(R(1), order > levels ? order - levels : 0);
  for (std::size_t k = levels; k-- > 0;) {
    const std::size_t prec = order - k;
    TruncSeries<R> denom = TruncSeries<R>::constant(R(1), prec);
    for (std::size_t i = 0; i + 1 <= prec && i <= tail.order(); ++i) denom[i + 1] -= s.alphas[k] * tail[i];
    tail = detail::invert_denominator(denom);
  }
  if (tail.order() < order) {
    std::vector<R> c = tail.coeffs();
    c.resize(order + 1, R(0));
    tail = TruncSeries<R>(std::move(c));
  }
  return tail;
}

template <class R>
TruncSeries<R> cf_to_series(const JFrac<R>& j, std::size_t order) {
  j.validate();
  detail::require_order(j.determined_order(), order, "J-fraction of depth " + std::to_string(j.depth()));
  // Level k enters the expansion multiplied by t^{2k}.
  std::size_t levels = std::min(j.depth(), order / 2 + 1);
  TruncSeries<R> tail = TruncSeries<R>::constant(R(1), 0);
  bool have_tail = false;
  for (std::size_t k = levels; k-- > 0;) {
    const std::size_t prec = order - 2 * k;
    TruncSeries<R> denom = TruncSeries<R>::constant(R(1), prec);
    if (prec >= 1) denom[1] -= j.gammas[k];
    if (have_tail) {
      for (std::size_t i = 0; i + 2 <= prec && i <= tail.order(); ++i) denom[i + 2] -= j.betas[k] * tail[i];
    }
    tail = detail::invert_denominator(denom);
    have_tail = true;
  }
  return tail;
}

enum class ContractionKind { kEven, kOdd };

/// Result of contracting an S-fraction. For the odd kind the S-fraction equals
/// 1 + lead·t·J, otherwise it equals J.
template <class R>
struct Contraction {
  JFrac<R> jfrac;
  std::optional<R> lead;
};

template <class R>
Contraction<R> contract(const SFrac<R>& s, ContractionKind kind) {
  std::vector<R> a = s.alphas;
  auto alpha = [&](std::size_t i) -> const R& { return a[i - 1]; };  // 1-based
  Contraction<R> out;
  out.jfrac.terminates = s.terminates;
  if (kind == ContractionKind::kEven) {
    if (a.empty()) {
      if (!s.terminates) throw Error(Errc::kInsufficientDepth, "even contraction needs alpha_1");
      a.push_back(R(0));
    }
    if (s.terminates && a.size() % 2 == 0) a.push_back(R(0));
    // gamma_0 = alpha_1, gamma_n = alpha_{2n} + alpha_{2n+1}, beta_n = alpha_{2n-1} alpha_{2n}
    out.jfrac.gammas.push_back(alpha(1));
    for (std::size_t n = 1; 2 * n + 1 <= a.size(); ++n) {
      out.jfrac.betas.push_back(alpha(2 * n - 1) * alpha(2 * n));
      out.jfrac.gammas.push_back(alpha(2 * n) + alpha(2 * n + 1));
    }
  } else {
    if (s.terminates) {
      while (a.size() < 2 || a.size() % 2 == 1) a.push_back(R(0));
    } else if (a.size() < 2) {
      throw Error(Errc::kInsufficientDepth, "odd contraction needs alpha_1 and alpha_2");
    }
    // lead = alpha_1, gamma'_k = alpha_{2k+1} + alpha_{2k+2}, beta'_k = alpha_{2k} alpha_{2k+1}
    out.lead = alpha(1);
    out.jfrac.gammas.push_back(alpha(1) + alpha(2));
    for (std::size_t k = 1; 2 * k + 2 <= a.size(); ++k) {
      out.jfrac.betas.push_back(alpha(2 * k) * alpha(2 * k + 1));
      out.jfrac.gammas.push_back(alpha(2 * k + 1) + alpha(2 * k + 2));
    }
  }
  return out;
}

template <class R>
TruncSeries<R> cf_to_series(const Contraction<R>& c, std::size_t order) {
  if (!c.lead) return cf_to_series(c.jfrac, order);
  TruncSeries<R> out = TruncSeries<R>::constant(R(1), order);
  if (order == 0) return out;
  const TruncSeries<R> inner = cf_to_series(c.jfrac, order - 1);
  for (std::size_t n = 0; n < order; ++n) out[n + 1] += *c.lead * inner[n];
  return out;
}

/// Recurrence coefficients of the monic orthogonal polynomials of a
/// functional, obtained by Gram-Schmidt against the moments. Stops when the
/// moments run out or the functional degenerates consistently (finite support).
template <class R>
struct FavardResult {
  std::vector<R> b;
  std::vector<R> lambda;  // lambda[k] = lambda_{k+1}
  bool terminated = false;
};

template <class R>
FavardResult<R> favard(const MomentFunctional<R>& functional) {
  const auto& mu = functional.moments;
  if (mu.empty()) throw Error(Errc::kInvalidArgument, "the functional has no moments");
  if (is_zero(mu[0])) throw Error(Errc::kSingularHankel, "mu_0 vanishes");
  const std::size_t top = mu.size() - 1;
  FavardResult<R> out;
  UPoly<R> prev;
  UPoly<R> cur(R(1));
  R h = mu[0];
  const UPoly<R> x = UPoly<R>::x();
  for (std::size_t k = 0; 2 * k + 1 <= top; ++k) {
    const R bk = functional.apply(x * cur * cur) * inverse(h);
    out.b.push_back(bk);
    UPoly<R> next = UPoly<R>::linear(-bk, R(1)) * cur;
    if (k > 0) next -= prev.scaled(out.lambda[k - 1]);
    if (2 * k + 2 > top) break;
    const R h_next = functional.apply(next * next);
    if (is_zero(h_next)) {
      // A finitely supported functional annihilates every multiple of P_{k+1};
      // anything else means the Hankel determinant vanishes in the middle.
      UPoly<R> probe = next;
      for (std::size_t j = 0; probe.degree() <= static_cast<int>(top); ++j) {
        if (!is_zero(functional.apply(probe))) {
          throw Error(Errc::kSingularHankel,
                      "Hankel determinant of order " + std::to_string(k + 2) + " vanishes");
        }
        probe = x * probe;
      }
      out.terminated = true;
      break;
    }
    out.lambda.push_back(h_next * inverse(h));
    prev = std::move(cur);
    cur = std::move(next);
    h = h_next;
  }
  return out;
}

/// J-fraction whose expansion reproduces the moments as far as they go.
template <class R>
JFrac<R> series_to_jfrac(const MomentFunctional<R>& functional) {
  FavardResult<R> f = favard(functional);
  JFrac<R> j;
  j.gammas = std::move(f.b);
  j.betas = std::move(f.lambda);
  j.betas.resize(j.gammas.size() - 1, R(0));
  j.terminates = f.terminated;
  return j;
}

/// S-fraction whose expansion reproduces the moments, by splitting
/// b_0 = alpha_1, lambda_k = alpha_{2k-1} alpha_{2k}, b_k = alpha_{2k} + alpha_{2k+1}.
template <class R>
SFrac<R> series_to_sfrac(const MomentFunctional<R>& functional) {
  const auto& mu = functional.moments;
  if (mu.empty()) throw Error(Errc::kInvalidArgument, "the functional has no moments");
  if (is_zero(mu[0])) throw Error(Errc::kSingularHankel, "mu_0 vanishes");
  if (mu[0] != R(1)) throw Error(Errc::kInvalidArgument, "S-fraction inversion needs mu_0 = 1");
  SFrac<R> s;
  if (mu.size() == 1) return s;
  const FavardResult<R> f = favard(functional);
  s.alphas.push_back(f.b[0]);
  for (std::size_t k = 1; k < f.b.size() || k <= f.lambda.size(); ++k) {
    if (k > f.lambda.size()) break;
    const R& prev = s.alphas.back();
    if (is_zero(prev)) {
      throw Error(Errc::kZeroAlphaCoefficient,
                  "alpha_" + std::to_string(s.alphas.size()) + " vanishes before a nonzero lambda_" + std::to_string(k));
    }
    s.alphas.push_back(f.lambda[k - 1] * inverse(prev));
    if (k < f.b.size()) s.alphas.push_back(f.b[k] - s.alphas.back());
  }
  s.terminates = f.terminated;
  // A finite fraction ends at its last nonzero coefficient.
  if (s.terminates) {
    while (s.alphas.size() > 1 && is_zero(s.alphas.back())) s.alphas.pop_back();
  }
  return s;
}

namespace detail {

template <class R>
R hankel_laplace(const std::vector<R>& mu, std::size_t n, std::size_t row, unsigned mask,
                 std::map<unsigned, R>& memo) {
  if (row == n) return R(1);
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  R total(0);
  int sign = 1;
  for (std::size_t col = 0; col < n; ++col) {
    if (mask & (1u << col)) continue;
    const R& entry = mu[row + col];
    if (!is_zero(entry)) {
      R minor = hankel_laplace(mu, n, row + 1, mask | (1u << col), memo);
      if (sign > 0) {
        total += entry * minor;
      } else {
        total -= entry * minor;
      }
    }
    sign = -sign;
  }
  memo.emplace(mask, total);
  return total;
}

}  // namespace detail

/// det(mu_{i+j})_{0<=i,j<n}; 1 for n = 0.
template <class R>
R hankel_det(const MomentFunctional<R>& functional, std::size_t n) {
  if (n == 0) return R(1);
  if (functional.moments.size() < 2 * n - 1) {
    throw Error(Errc::kDegreeExceedsMoments, "Hankel determinant of order " + std::to_string(n) + " needs mu_" +
                                                 std::to_string(2 * n - 2));
  }
  if constexpr (std::is_same_v<R, Rational>) {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] = functional.moments[i + j];
    }
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t pivot = c;
      while (pivot < n && m[pivot][c].is_zero()) ++pivot;
      if (pivot == n) return Rational(0);
      if (pivot != c) {
        std::swap(m[pivot], m[c]);
        det = -det;
      }
      det *= m[c][c];
      const Rational inv = m[c][c].inverse();
      for (std::size_t r = c + 1; r < n; ++r) {
        if (m[r][c].is_zero()) continue;
        const Rational factor = m[r][c] * inv;
        for (std::size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
      }
    }
    return det;
  } else {
    if (n > 16) throw Error(Errc::kInvalidArgument, "symbolic Hankel determinants are limited to order 16");
    std::map<unsigned, R> memo;
    return detail::hankel_laplace(functional.moments, n, 0, 0u, memo);
  }
}

}  // namespace momentcf
