#pragma once

// Reference computations that share no code with the library's algorithms.
// They are slow and only meant for small sizes.

#include <functional>
#include <vector>

#include "momentcf/rational.hpp"

namespace oracle {

using momentcf::Rational;

/// Weighted Motzkin paths of length n: an up step costs 1, a level step at
/// height h costs gammas[h], a down step from height h costs betas[h-1].
/// Entry n of the result is the total weight, which is the t^n coefficient of
/// the J-fraction.
inline std::vector<Rational> motzkin_moments(const std::vector<Rational>& gammas, const std::vector<Rational>& betas,
                                             std::size_t n_max) {
  std::vector<Rational> out(n_max + 1, Rational(0));
  std::function<void(std::size_t, std::size_t, std::size_t, const Rational&)> walk =
      [&](std::size_t length, std::size_t steps, std::size_t height, const Rational& weight) {
        if (height > length - steps) return;  // cannot get back to the axis
        if (steps == length) {
          out[length] += weight;
          return;
        }
        if (height < gammas.size() && height + 1 <= betas.size()) walk(length, steps + 1, height + 1, weight);
        if (height < gammas.size()) walk(length, steps + 1, height, weight * gammas[height]);
        if (height > 0) walk(length, steps + 1, height - 1, weight * betas[height - 1]);
      };
  out[0] = Rational(1);
  for (std::size_t n = 1; n <= n_max; ++n) walk(n, 0, 0, Rational(1));
  return out;
}

/// Dyck paths of semilength n where an up step to height h costs alphas[h-1];
/// the t^n coefficient of the S-fraction.
inline std::vector<Rational> dyck_moments(const std::vector<Rational>& alphas, std::size_t n_max) {
  std::vector<Rational> out(n_max + 1, Rational(0));
  std::function<void(std::size_t, std::size_t, std::size_t, const Rational&)> walk =
      [&](std::size_t length, std::size_t steps, std::size_t height, const Rational& weight) {
        if (height > length - steps) return;
        if (steps == length) {
          out[length / 2] += weight;
          return;
        }
        if (height < alphas.size()) walk(length, steps + 1, height + 1, weight * alphas[height]);
        if (height > 0) walk(length, steps + 1, height - 1, weight);
      };
  out[0] = Rational(1);
  for (std::size_t n = 1; n <= n_max; ++n) walk(2 * n, 0, 0, Rational(1));
  return out;
}

/// Bernoulli numbers B_0..B_n by the Akiyama-Tanigawa algorithm, which gives
/// B_1 = +1/2; the sign is flipped to the B_1 = -1/2 convention.
inline std::vector<Rational> bernoulli(std::size_t n) {
  std::vector<Rational> out;
  std::vector<Rational> row;
  for (std::size_t m = 0; m <= n; ++m) {
    row.push_back(Rational(1, static_cast<long>(m + 1)));
    for (std::size_t j = m; j >= 1; --j) row[j - 1] = Rational(static_cast<long>(j)) * (row[j - 1] - row[j]);
    out.push_back(row[0]);
  }
  if (n >= 1) out[1] = -out[1];
  return out;
}

/// Unsigned Genocchi numbers G_m = |2(1 - 2^m) B_m|.
inline Rational genocchi(long m, const std::vector<Rational>& b) {
  return (Rational(2) * (Rational(1) - Rational(2).pow(m)) * b[static_cast<std::size_t>(m)]).abs();
}

inline Rational factorial(long n) {
  Rational f(1);
  for (long k = 2; k <= n; ++k) f *= Rational(k);
  return f;
}

/// sin²(t/2) = (1 - cos t)/2.
inline std::vector<Rational> sin_half_squared(std::size_t order) {
  std::vector<Rational> c(order + 1, Rational(0));
  for (std::size_t k = 1; 2 * k <= order; ++k) {
    c[2 * k] = Rational(k % 2 ? 1 : -1) / (Rational(2) * factorial(static_cast<long>(2 * k)));
  }
  return c;
}

/// 2 sin(t/2).
inline std::vector<Rational> two_sin_half(std::size_t order) {
  std::vector<Rational> c(order + 1, Rational(0));
  for (std::size_t k = 0; 2 * k + 1 <= order; ++k) {
    c[2 * k + 1] = Rational(k % 2 ? -2 : 2) /
                   (Rational(2).pow(static_cast<long>(2 * k + 1)) * factorial(static_cast<long>(2 * k + 1)));
  }
  return c;
}

}  // namespace oracle
