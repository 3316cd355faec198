#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "momentcf/error.hpp"
#include "momentcf/ring.hpp"

namespace momentcf {

/// Dense polynomial in one distinguished variable with coefficients in R.
/// No trailing zero coefficients are stored; the zero polynomial is empty.
template <class R>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(const R& constant) : c_{constant} { trim(); }  // NOLINT(google-explicit-constructor)

  static UPoly x() { return monomial(1, R(1)); }
  static UPoly monomial(std::size_t degree, const R& coeff) {
    std::vector<R> c(degree + 1, R(0));
    c[degree] = coeff;
    return UPoly(std::move(c));
  }
  /// c0 + c1·x
  static UPoly linear(const R& c0, const R& c1) { return UPoly(std::vector<R>{c0, c1}); }

  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }

  R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : R(0); }
  R leading() const { return c_.empty() ? R(0) : c_.back(); }

  R eval(const R& at) const {
    R acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<R> out(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(out));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  UPoly scaled(const R& s) const {
    UPoly r = *this;
    for (auto& v : r.c_) v = v * s;
    r.trim();
    return r;
  }

  /// Synthetic division by (x + shift): returns {quotient, remainder}.
  std::pair<UPoly, R> divide_linear(const R& shift) const {
    if (c_.empty()) return {UPoly(), R(0)};
    std::vector<R> q(c_.size() - 1, R(0));
    R carry = c_.back();
    for (std::size_t k = c_.size() - 1; k-- > 0;) {
      q[k] = carry;
      carry = c_[k] - shift * carry;
    }
    return {UPoly(std::move(q)), carry};
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

/// prod_{j<n} (x + nodes[j])
template <class R>
UPoly<R> newton_basis(const std::vector<R>& nodes, std::size_t n) {
  if (n > nodes.size()) throw Error(Errc::kInvalidArgument, "not enough Newton nodes");
  UPoly<R> p(R(1));
  for (std::size_t j = 0; j < n; ++j) p *= UPoly<R>::linear(nodes[j], R(1));
  return p;
}

template <class R, class ToString>
std::string to_string(const UPoly<R>& p, const std::string& var, ToString&& fmt) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const R& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    out += "(" + fmt(c) + ")";
    if (k > 0) out += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return out;
}

}  // namespace momentcf
