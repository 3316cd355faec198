#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "momentcf/askey_wilson.hpp"
#include "momentcf/hahn.hpp"
#include "momentcf/report.hpp"
#include "momentcf/wilson.hpp"

namespace momentcf {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Size knobs shared by all verifications; unset fields use each check's
/// documented default.
struct CheckOptions {
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::size_t> n;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> order;
};

struct CheckInfo {
  std::string id;
  std::string description;
  std::function<CheckReport(const CheckOptions&)> run;
};

/// Every named verification, in a stable order.
const std::vector<CheckInfo>& check_registry();
const CheckInfo* find_check(std::string_view id);
CheckReport run_check(std::string_view id, const CheckOptions& options = {});

enum class WilsonEgfVariant { kAZero, kAHalf };
enum class HahnEgfVariant { kClosed, kPfaff, kTerminating, kFiniteSum };

/// The exponential generating functions of the Wilson moments at a = 0
/// (sin² argument) and a = 1/2 (2 sin(t/2) prefactor).
CheckReport wilson_egf_check(WilsonEgfVariant variant, const Rational& b, const Rational& c, const Rational& d,
                             std::size_t order);

/// The matching statements for the continuous dual Hahn moments at a = 0 or 1/2.
CheckReport cdh_egf_check(const Rational& a, const Rational& b, const Rational& c, std::size_t order);

/// Rescaled continuous dual Hahn polynomials against the Dumont-Foata moments.
CheckReport df_rescaled_cdh_check(std::size_t n_max, std::uint64_t seed);

CheckReport hahn_sfrac_check(const HahnParams& p, std::size_t depth);
CheckReport hahn_egf_check(const HahnParams& p, HahnEgfVariant variant, std::size_t order);

CheckReport aw_functional_checks(const AWParams& p, std::size_t m_max, std::size_t n_max);
CheckReport aw_orthogonality_spot(const AWParams& p, std::size_t n_max);

/// Coefficient 2n holds u_n/(2n)!, odd coefficients vanish.
template <class R>
TruncSeries<R> even_egf(const std::vector<R>& u, std::size_t order) {
  TruncSeries<R> s(order);
  for (std::size_t n = 0; 2 * n <= order && n < u.size(); ++n) {
    s[2 * n] = u[n] * R(factorial(static_cast<long>(2 * n)).inverse());
  }
  return s;
}

/// Coefficient 2n+1 holds u_n/(2n+1)!, even coefficients vanish.
template <class R>
TruncSeries<R> odd_egf(const std::vector<R>& u, std::size_t order) {
  TruncSeries<R> s(order);
  for (std::size_t n = 0; 2 * n + 1 <= order && n < u.size(); ++n) {
    s[2 * n + 1] = u[n] * R(factorial(static_cast<long>(2 * n + 1)).inverse());
  }
  return s;
}

}  // namespace momentcf
