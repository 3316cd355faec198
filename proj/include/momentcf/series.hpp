#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "momentcf/error.hpp"
#include "momentcf/ring.hpp"
#include "momentcf/rational.hpp"
#include "momentcf/upoly.hpp"

namespace momentcf {

/// Power series in t truncated after t^order. Arithmetic between two series
/// yields a series of the smaller order.
template <class R>
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order = 0) : c_(order + 1, R(0)) {}
  explicit TruncSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw Error(Errc::kInvalidArgument, "a truncated series needs at least one coefficient");
  }

  static TruncSeries constant(const R& value, std::size_t order) {
    TruncSeries s(order);
    s.c_[0] = value;
    return s;
  }
  /// coeff·t^k
  static TruncSeries monomial(std::size_t k, const R& coeff, std::size_t order) {
    TruncSeries s(order);
    if (k <= order) s.c_[k] = coeff;
    return s;
  }
  /// 1/(1 - ratio·t)
  static TruncSeries geometric(const R& ratio, std::size_t order) {
    TruncSeries s(order);
    R power(1);
    for (std::size_t n = 0; n <= order; ++n) {
      s.c_[n] = power;
      power *= ratio;
    }
    return s;
  }
  static TruncSeries from_poly(const UPoly<R>& p, std::size_t order) {
    TruncSeries s(order);
    for (std::size_t n = 0; n <= order; ++n) s.c_[n] = p.coeff(n);
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const std::vector<R>& coeffs() const { return c_; }
  const R& operator[](std::size_t n) const { return c_.at(n); }
  R& operator[](std::size_t n) { return c_.at(n); }

  TruncSeries truncated(std::size_t order) const {
    std::vector<R> c(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
    return TruncSeries(std::move(c));
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    shrink_to(o.order());
    for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += o.c_[n];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    shrink_to(o.order());
    for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= o.c_[n];
    return *this;
  }
  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    TruncSeries r(order);
    for (std::size_t i = 0; i <= order; ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j <= order; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  TruncSeries scaled(const R& s) const {
    TruncSeries r = *this;
    for (auto& v : r.c_) v = v * s;
    return r;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

 private:
  void shrink_to(std::size_t order) {
    if (order < this->order()) c_.resize(order + 1);
  }

  std::vector<R> c_;
};

/// 1/s. Error(kNonInvertibleConstantTerm) when s[0] has no inverse.
template <class R>
TruncSeries<R> reciprocal(const TruncSeries<R>& s) {
  R inv0;
  try {
    inv0 = inverse(s[0]);
  } catch (const Error&) {
    throw Error(Errc::kNonInvertibleConstantTerm, "constant term is not invertible");
  }
  const std::size_t order = s.order();
  TruncSeries<R> r(order);
  r[0] = inv0;
  for (std::size_t n = 1; n <= order; ++n) {
    R acc(0);
    for (std::size_t k = 1; k <= n; ++k) {
      if (!is_zero(s[k])) acc += s[k] * r[n - k];
    }
    r[n] = -(inv0 * acc);
  }
  return r;
}

/// outer(inner(t)) by Horner evaluation; inner must have zero constant term.
template <class R>
TruncSeries<R> compose(const TruncSeries<R>& outer, const TruncSeries<R>& inner) {
  if (!is_zero(inner[0])) {
    throw Error(Errc::kNonzeroConstantTermInComposition, "inner series has a nonzero constant term");
  }
  const std::size_t order = std::min(outer.order(), inner.order());
  const TruncSeries<R> arg = inner.truncated(order);
  TruncSeries<R> acc = TruncSeries<R>::constant(outer[order], order);
  for (std::size_t k = order; k-- > 0;) {
    acc = acc * arg;
    acc[0] += outer[k];
  }
  return acc;
}

/// exp(f) = sum f^k/k! for f with zero constant term, computed from g' = f'g.
template <class R>
TruncSeries<R> exp(const TruncSeries<R>& f) {
  if (!is_zero(f[0])) {
    throw Error(Errc::kNonzeroConstantTermInComposition, "exp argument has a nonzero constant term");
  }
  const std::size_t order = f.order();
  TruncSeries<R> g(order);
  g[0] = R(1);
  for (std::size_t n = 1; n <= order; ++n) {
    R acc(0);
    for (std::size_t k = 1; k <= n; ++k) {
      if (!is_zero(f[k])) acc += R(static_cast<long>(k)) * f[k] * g[n - k];
    }
    g[n] = acc * R(Rational(1, static_cast<long>(n)));
  }
  return g;
}

/// The OGF-to-EGF map: coefficient c_n becomes c_n/n!.
template <class R>
TruncSeries<R> egf_transform(const TruncSeries<R>& s) {
  TruncSeries<R> r = s;
  Rational inv_fact(1);
  for (std::size_t n = 0; n <= s.order(); ++n) {
    if (n > 0) inv_fact /= Rational(static_cast<long>(n));
    r[n] = s[n] * R(inv_fact);
  }
  return r;
}

/// Inverse of egf_transform: coefficient c_n becomes c_n·n!.
template <class R>
TruncSeries<R> egf_inverse(const TruncSeries<R>& s) {
  TruncSeries<R> r = s;
  Rational fact(1);
  for (std::size_t n = 0; n <= s.order(); ++n) {
    if (n > 0) fact *= Rational(static_cast<long>(n));
    r[n] = s[n] * R(fact);
  }
  return r;
}

/// Coefficients of sum_k [prod (num)_k / prod (den)_k] z^k/k! for k <= order.
/// Stops early once a numerator parameter terminates the series.
template <class R>
std::vector<R> hyper_coefficients(const std::vector<R>& num, const std::vector<R>& den, std::size_t order) {
  std::vector<R> c(order + 1, R(0));
  c[0] = R(1);
  for (std::size_t k = 1; k <= order; ++k) {
    if (is_zero(c[k - 1])) break;
    const R shift(static_cast<long>(k - 1));
    R top(1);
    for (const auto& a : num) top *= a + shift;
    R bottom(static_cast<long>(k));
    for (const auto& b : den) {
      const R factor = b + shift;
      if (is_zero(factor)) {
        throw Error(Errc::kDenominatorParameterPole,
                    "denominator parameter vanishes in the term of order " + std::to_string(k));
      }
      bottom *= factor;
    }
    c[k] = c[k - 1] * top * inverse(bottom);
  }
  return c;
}

/// Truncation of pFq(num; den; arg) where arg has zero constant term.
template <class R>
TruncSeries<R> hyper_series(const std::vector<R>& num, const std::vector<R>& den, const TruncSeries<R>& arg) {
  if (!is_zero(arg[0])) {
    throw Error(Errc::kNonzeroConstantTermInComposition, "hypergeometric argument has a nonzero constant term");
  }
  const auto c = hyper_coefficients(num, den, arg.order());
  return compose(TruncSeries<R>(c), arg);
}

/// e^{c t}
template <class R>
TruncSeries<R> exp_linear(const R& c, std::size_t order) {
  return egf_transform(TruncSeries<R>::geometric(c, order));
}

/// sin(c t)
template <class R>
TruncSeries<R> sin_linear(const R& c, std::size_t order) {
  TruncSeries<R> e = exp_linear(c, order);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n % 2 == 0) {
      e[n] = R(0);
    } else if (n % 4 == 3) {
      e[n] = -e[n];
    }
  }
  return e;
}

/// cos(c t)
template <class R>
TruncSeries<R> cos_linear(const R& c, std::size_t order) {
  TruncSeries<R> e = exp_linear(c, order);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n % 2 == 1) {
      e[n] = R(0);
    } else if (n % 4 == 2) {
      e[n] = -e[n];
    }
  }
  return e;
}

/// s/t^k; the first k coefficients must vanish. The order drops by k.
template <class R>
TruncSeries<R> divide_by_t(const TruncSeries<R>& s, std::size_t k) {
  if (k > s.order()) throw Error(Errc::kInvalidArgument, "division by a power of t beyond the order");
  for (std::size_t n = 0; n < k; ++n) {
    if (!is_zero(s[n])) throw Error(Errc::kInvalidArgument, "series is not divisible by t^" + std::to_string(k));
  }
  return TruncSeries<R>(std::vector<R>(s.coeffs().begin() + static_cast<std::ptrdiff_t>(k), s.coeffs().end()));
}

enum class TrigArg { kSinHalfSquared, kTwoSinHalf, kOneMinusExpNeg };

/// sin²(t/2), 2 sin(t/2) or 1 - e^{-t}, truncated at `order`.
TruncSeries<Rational> trig_arg(TrigArg kind, std::size_t order);

}  // namespace momentcf
