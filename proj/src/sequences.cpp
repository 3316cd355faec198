#include "momentcf/sequences.hpp"

#include "momentcf/pochhammer.hpp"

namespace momentcf {

std::vector<Rational> bernoulli_numbers(long n) {
  if (n < 0) throw Error(Errc::kInvalidArgument, "Bernoulli index must be nonnegative");
  std::vector<Rational> b{Rational(1)};
  for (long m = 1; m <= n; ++m) {
    Rational acc(0);
    for (long k = 0; k < m; ++k) acc += binomial(m + 1, k) * b[static_cast<std::size_t>(k)];
    b.push_back(-acc / Rational(m + 1));
  }
  return b;
}

Rational bernoulli(long n) { return bernoulli_numbers(n).back(); }

Rational genocchi(long n) {
  if (n < 2 || n % 2 != 0) {
    throw Error(Errc::kOddIndex, "Genocchi numbers are indexed by even n >= 2, got " + std::to_string(n));
  }
  return Rational(2) * (Rational(2).pow(n) - Rational(1)) * bernoulli(n).abs();
}

Rational median_genocchi(long n) {
  if (n < 0) throw Error(Errc::kInvalidArgument, "median Genocchi index must be nonnegative");
  if (n == 0) return Rational(1);
  const std::vector<Rational> b = bernoulli_numbers(2 * n);
  auto g = [&](long m) { return Rational(2) * (Rational(2).pow(m) - Rational(1)) * b[static_cast<std::size_t>(m)].abs(); };
  Rational sum(0);
  for (long k = 1; k <= (n + 1) / 2; ++k) {
    const Rational term = binomial(n, 2 * k - 1) * g(2 * n + 2 - 2 * k);
    sum += (k % 2 == 1) ? term : -term;
  }
  return sum;
}

SFrac<Rational> genocchi_sfrac(std::size_t depth) {
  SFrac<Rational> s;
  for (std::size_t i = 1; i <= depth; ++i) {
    const long k = static_cast<long>((i + 1) / 2);
    s.alphas.push_back(i % 2 == 1 ? Rational(k * k) : Rational(k * (k + 1)));
  }
  return s;
}

SFrac<Rational> median_genocchi_sfrac(std::size_t depth) {
  SFrac<Rational> s;
  for (std::size_t i = 1; i <= depth; ++i) {
    const long k = static_cast<long>((i + 1) / 2);
    s.alphas.push_back(Rational(k * k));
  }
  return s;
}

JFrac<Rational> median_genocchi_jfrac(std::size_t depth) {
  JFrac<Rational> j;
  for (std::size_t i = 0; i < depth; ++i) {
    const long n = static_cast<long>(i) + 1;
    j.gammas.push_back(Rational(2 * n * n));
    if (i + 1 < depth) j.betas.push_back(Rational(n * (n + 1) * n * (n + 1)));
  }
  return j;
}

}  // namespace momentcf
