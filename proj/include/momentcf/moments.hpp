#pragma once

#include <optional>
#include <string>
#include <vector>

#include "momentcf/error.hpp"
#include "momentcf/pochhammer.hpp"
#include "momentcf/report.hpp"
#include "momentcf/series.hpp"
#include "momentcf/upoly.hpp"

namespace momentcf {

/// Linear functional on polynomials in one variable, given by its moments
/// mu_0..mu_N.
template <class R>
struct MomentFunctional {
  std::vector<R> moments;
  std::string variable = "x";

  std::size_t max_degree() const { return moments.empty() ? 0 : moments.size() - 1; }

  R apply(const UPoly<R>& p) const {
    if (p.degree() >= static_cast<int>(moments.size())) {
      throw Error(Errc::kDegreeExceedsMoments, "degree " + std::to_string(p.degree()) + " needs moments beyond mu_" +
                                                   std::to_string(max_degree()));
    }
    R sum(0);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
      if (!is_zero(p.coeffs()[k])) sum += p.coeffs()[k] * moments[k];
    }
    return sum;
  }
  R operator()(const UPoly<R>& p) const { return apply(p); }
};

template <class R>
R apply_functional(const MomentFunctional<R>& functional, const UPoly<R>& p) {
  return functional.apply(p);
}

/// Monic recurrence P_{n+1} = (x - b_n) P_n - lambda_n P_{n-1}.
/// `lambda[k]` holds lambda_{k+1}.
template <class R>
struct ThreeTermRecurrence {
  std::vector<R> b;
  std::vector<R> lambda;

  std::size_t depth() const { return b.size(); }
};

template <class R>
std::vector<UPoly<R>> monic_polys(const ThreeTermRecurrence<R>& rec, std::size_t n_max) {
  if (n_max > rec.depth()) {
    throw Error(Errc::kInsufficientDepth, "recurrence has " + std::to_string(rec.depth()) + " levels, P_" +
                                              std::to_string(n_max) + " requested");
  }
  if (n_max >= 2 && rec.lambda.size() < n_max - 1) {
    throw Error(Errc::kInsufficientDepth, "recurrence is missing lambda coefficients");
  }
  std::vector<UPoly<R>> polys{UPoly<R>(R(1))};
  for (std::size_t n = 0; n < n_max; ++n) {
    UPoly<R> next = UPoly<R>::linear(-rec.b[n], R(1)) * polys[n];
    if (n > 0) next -= polys[n - 1].scaled(rec.lambda[n - 1]);
    polys.push_back(std::move(next));
  }
  return polys;
}

template <class R>
struct OrthogonalityPair {
  std::size_t m = 0;
  std::size_t n = 0;
  R value;
  R expected;
  bool ok = false;
};

template <class R>
struct OrthogonalityReport {
  std::vector<OrthogonalityPair<R>> pairs;
  /// First index whose expected norm vanishes (the functional degenerates there).
  std::optional<std::size_t> truncation;

  bool passed() const {
    for (const auto& p : pairs) {
      if (!p.ok) return false;
    }
    return true;
  }
  std::optional<OrthogonalityPair<R>> first_failure() const {
    for (const auto& p : pairs) {
      if (!p.ok) return p;
    }
    return std::nullopt;
  }
};

/// Evaluates L(P_m P_n) for every pair and compares with 0 off the diagonal
/// and `norms[n]` on it.
template <class R>
OrthogonalityReport<R> orthogonality_check(const MomentFunctional<R>& functional, const std::vector<UPoly<R>>& polys,
                                           const std::vector<R>& norms) {
  if (norms.size() < polys.size()) throw Error(Errc::kInvalidArgument, "one expected norm per polynomial is required");
  OrthogonalityReport<R> report;
  for (std::size_t n = 0; n < polys.size(); ++n) {
    if (is_zero(norms[n]) && !report.truncation) report.truncation = n;
  }
  for (std::size_t m = 0; m < polys.size(); ++m) {
    for (std::size_t n = m; n < polys.size(); ++n) {
      OrthogonalityPair<R> pair;
      pair.m = m;
      pair.n = n;
      pair.value = functional.apply(polys[m] * polys[n]);
      pair.expected = m == n ? norms[n] : R(0);
      pair.ok = pair.value == pair.expected;
      report.pairs.push_back(std::move(pair));
    }
  }
  return report;
}

/// nu_n = sum_k C(n,k) (-d)^{n-k} mu_k, i.e. nu(f) = L(f(x - d)).
template <class R>
MomentFunctional<R> shift_moments(const MomentFunctional<R>& functional, const R& d) {
  const auto& mu = functional.moments;
  MomentFunctional<R> out{{}, functional.variable};
  std::vector<R> neg_d_pow{R(1)};
  for (std::size_t n = 1; n < mu.size(); ++n) neg_d_pow.push_back(neg_d_pow.back() * (-d));
  for (std::size_t n = 0; n < mu.size(); ++n) {
    R sum(0);
    for (std::size_t k = 0; k <= n; ++k) {
      sum += R(binomial(static_cast<long>(n), static_cast<long>(k))) * neg_d_pow[n - k] * mu[k];
    }
    out.moments.push_back(std::move(sum));
  }
  return out;
}

/// Coefficients c_0..c_n with x^n = sum_k c_k (x+a_0)···(x+a_{k-1}), by
/// repeated synthetic division. Nodes may repeat.
template <class R>
std::vector<R> newton_expand(std::size_t n, const std::vector<R>& nodes) {
  if (nodes.size() < n) throw Error(Errc::kInvalidArgument, "newton_expand needs n nodes");
  UPoly<R> rest = UPoly<R>::monomial(n, R(1));
  std::vector<R> c;
  c.reserve(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    auto [quotient, remainder] = rest.divide_linear(nodes[k]);
    c.push_back(std::move(remainder));
    rest = std::move(quotient);
  }
  c.push_back(rest.coeff(0));
  return c;
}

/// sum_n v_n t^n / prod_{j<=n} (1 + a_j t), truncated at order = v.size()-1.
/// If v_n = L((x+a_0)···(x+a_{n-1})) then coefficient n is L(x^n).
template <class R>
TruncSeries<R> moment_ogf(const std::vector<R>& values, const std::vector<R>& nodes) {
  if (values.empty()) throw Error(Errc::kInvalidArgument, "moment_ogf needs at least one value");
  if (nodes.size() < values.size()) throw Error(Errc::kInvalidArgument, "moment_ogf needs one node per value");
  const std::size_t order = values.size() - 1;
  TruncSeries<R> sum(order);
  // running = t^n / prod_{j<=n}(1 + a_j t)
  TruncSeries<R> running = TruncSeries<R>::constant(R(1), order);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) {
      for (std::size_t i = order; i > 0; --i) running[i] = running[i - 1];
      running[0] = R(0);
    }
    for (std::size_t i = 1; i <= order; ++i) running[i] -= nodes[n] * running[i - 1];
    if (!is_zero(values[n])) sum += running.scaled(values[n]);
  }
  return sum;
}

/// Both sides of the partial-sum identity behind the Newton-basis expansion
/// of 1/(1 - x t):
///   sum_{n<=m} (x+a_0)···(x+a_{n-1}) t^n / prod_{j<=n}(1+a_j t)
///     = [1 - (x+a_0)···(x+a_m) t^{m+1} / prod_{j<=m}(1+a_j t)] / (1 - x t).
template <class R>
CheckReport nicole_partial_sum_check(std::size_t m, const R& x, const std::vector<R>& nodes, std::size_t order) {
  if (nodes.size() < m + 1) throw Error(Errc::kInvalidArgument, "nicole check needs m+1 nodes");
  if (order < m + 1) throw Error(Errc::kInvalidArgument, "nicole check needs order >= m+1");
  CheckReport report;
  report.id = "nicole-partial-sum";
  TruncSeries<R> lhs(order);
  TruncSeries<R> denom = TruncSeries<R>::constant(R(1), order);  // prod (1 + a_j t)
  R basis(1);                                                      // (x+a_0)···(x+a_{n-1})
  for (std::size_t n = 0; n <= m; ++n) {
    denom *= TruncSeries<R>::from_poly(UPoly<R>::linear(R(1), nodes[n]), order);
    lhs += TruncSeries<R>::monomial(n, basis, order) * reciprocal(denom);
    basis *= x + nodes[n];
  }
  TruncSeries<R> bracket = TruncSeries<R>::constant(R(1), order) -
                           TruncSeries<R>::monomial(m + 1, basis, order) * reciprocal(denom);
  const TruncSeries<R> rhs = bracket * TruncSeries<R>::geometric(x, order);
  report.expect_equal(lhs, rhs, "partial sum through m=" + std::to_string(m));
  return report;
}

}  // namespace momentcf
