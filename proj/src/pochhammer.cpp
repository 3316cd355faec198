#include "momentcf/pochhammer.hpp"

namespace momentcf {

Rational qpochhammer(const Rational& base, const Rational& q, long n) {
  if (n < 0) throw Error(Errc::kInvalidArgument, "q-pochhammer length must be nonnegative");
  Rational result(1);
  Rational power(1);
  for (long j = 0; j < n; ++j) {
    result *= Rational(1) - base * power;
    power *= q;
  }
  return result;
}

Rational binomial(long n, long k) {
  if (k < 0) return Rational(0);
  if (n >= 0 && k > n) return Rational(0);
  if (n >= 0) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
  }
  return binomial<Rational>(Rational(n), k);
}

}  // namespace momentcf
