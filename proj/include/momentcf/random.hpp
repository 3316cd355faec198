#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "momentcf/rational.hpp"

namespace momentcf {

/// Deterministic source of small random rationals. Each check derives its own
/// stream from (seed, check id) so checks stay reproducible in isolation.
class RationalSampler {
 public:
  RationalSampler(std::uint64_t seed, std::string_view stream) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char ch : stream) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    engine_.seed(seq);
  }

  /// p/q with |p| <= max_numerator and 1 <= q <= max_denominator.
  Rational next(long max_numerator = 12, long max_denominator = 7) {
    std::uniform_int_distribution<long> num(-max_numerator, max_numerator);
    std::uniform_int_distribution<long> den(1, max_denominator);
    return Rational(num(engine_), den(engine_));
  }
  Rational nonzero(long max_numerator = 12, long max_denominator = 7) {
    for (;;) {
      Rational r = next(max_numerator, max_denominator);
      if (!r.is_zero()) return r;
    }
  }
  /// Strictly between 0 and 1, with denominator at most max_denominator.
  Rational unit_interval(long max_denominator = 9) {
    std::uniform_int_distribution<long> den(2, max_denominator);
    const long q = den(engine_);
    std::uniform_int_distribution<long> num(1, q - 1);
    return Rational(num(engine_), q);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace momentcf
