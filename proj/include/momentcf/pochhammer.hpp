#pragma once

#include "momentcf/error.hpp"
#include "momentcf/rational.hpp"

namespace momentcf {

/// Rising factorial base·(base+1)···(base+n-1); 1 when n = 0.
template <class R>
R pochhammer(const R& base, long n) {
  if (n < 0) throw Error(Errc::kInvalidArgument, "pochhammer length must be nonnegative");
  R result(1);
  for (long i = 0; i < n; ++i) result *= base + R(i);
  return result;
}

/// q-shifted factorial (base; q)_n = prod_{j<n} (1 - base·q^j).
Rational qpochhammer(const Rational& base, const Rational& q, long n);

/// Binomial coefficient for any integer n; zero when k < 0 or k > n >= 0.
/// Negative n uses the falling-factorial definition n(n-1)···(n-k+1)/k!.
Rational binomial(long n, long k);

/// Generalized binomial top·(top-1)···(top-k+1)/k! for a ring element top.
template <class R>
R binomial(const R& top, long k) {
  if (k < 0) return R(0);
  R result(1);
  for (long i = 0; i < k; ++i) result *= top - R(i);
  return result * factorial(k).inverse();
}

}  // namespace momentcf
