#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "momentcf/rational.hpp"

namespace momentcf {

using VariableList = std::shared_ptr<const std::vector<std::string>>;

/// Sparse multivariate polynomial over Rational with named variables.
///
/// Terms are kept in graded-lexicographic order (leading term first) over the
/// declared variable order with no stored zeros, so structural equality is
/// mathematical equality. A monomial is packed into 64 bits: the top byte is
/// the total degree and byte 6-i holds the exponent of variable i. This caps a
/// polynomial at seven variables and total degree 255.
///
/// Constants carry no variable list and combine with any polynomial; two
/// non-constant operands must share the same variable list.
class MPoly {
 public:
  using Key = std::uint64_t;
  static constexpr std::size_t kMaxVariables = 7;
  static constexpr unsigned kMaxDegree = 255;

  struct Term {
    Key key;
    Rational coeff;
  };

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MPoly(int c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static VariableList make_variables(std::vector<std::string> names);
  static MPoly variable(const VariableList& vars, std::size_t index);
  /// One generator per name, all sharing a freshly declared variable list.
  static std::vector<MPoly> generators(std::vector<std::string> names);

  const VariableList& variables() const { return vars_; }
  std::vector<std::string> variable_names() const;

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;

  /// Coefficient of the monomial with the given exponents (missing trailing
  /// exponents are zero).
  Rational coefficient(std::span<const unsigned> exponents) const;

  /// Value at a full rational point; `point[i]` is the value of variable i.
  Rational eval(std::span<const Rational> point) const;
  Rational eval(const std::map<std::string, Rational>& point) const;

  /// Replaces variable `var` by `value`. The result keeps this polynomial's
  /// variable list.
  MPoly substitute(std::size_t var, const MPoly& value) const;
  MPoly substitute(const std::string& name, const MPoly& value) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  MPoly& operator/=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend MPoly operator/(MPoly a, const Rational& c) { return a /= c; }
  MPoly operator-() const;

  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly pow(unsigned exponent) const;

  /// "3/2*a^2*b - c + 1"; "0" for the zero polynomial.
  std::string to_string() const;
  /// Monomial text for a packed key, e.g. "a^2*b" or "1".
  std::string monomial_string(Key key) const;

  static unsigned exponent(Key key, std::size_t var) {
    return static_cast<unsigned>((key >> (8 * (6 - var))) & 0xffU);
  }
  static unsigned degree(Key key) { return static_cast<unsigned>(key >> 56); }
  static Key pack(std::span<const unsigned> exponents);

  friend std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

 private:
  static VariableList unify(const MPoly& a, const MPoly& b);
  void scale(const Rational& c);

  VariableList vars_;
  std::vector<Term> terms_;  // descending key order
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }
/// Inverse of a nonzero constant polynomial; Error(kNotInvertible) otherwise.
MPoly inverse(const MPoly& p);
inline std::string to_string(const MPoly& p) { return p.to_string(); }

}  // namespace momentcf
