#include "momentcf/mpoly.hpp"

#include <algorithm>
#include <unordered_map>

#include "momentcf/error.hpp"

namespace momentcf {

namespace {

struct KeyHash {
  std::size_t operator()(MPoly::Key k) const noexcept {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    k *= 0xc4ceb9fe1a85ec53ULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }
};

MPoly::Key multiply_keys(MPoly::Key a, MPoly::Key b) {
  if (MPoly::degree(a) + MPoly::degree(b) > MPoly::kMaxDegree) {
    throw Error(Errc::kInvalidArgument, "monomial degree exceeds 255");
  }
  return a + b;
}

bool same_variables(const VariableList& a, const VariableList& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace

MPoly::MPoly(const Rational& c) {
  if (!c.is_zero()) terms_.push_back({0, c});
}

VariableList MPoly::make_variables(std::vector<std::string> names) {
  if (names.size() > kMaxVariables) {
    throw Error(Errc::kInvalidArgument, "at most 7 polynomial variables are supported");
  }
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

MPoly MPoly::variable(const VariableList& vars, std::size_t index) {
  if (!vars || index >= vars->size()) throw Error(Errc::kInvalidArgument, "variable index out of range");
  MPoly p;
  p.vars_ = vars;
  std::vector<unsigned> e(index + 1, 0);
  e[index] = 1;
  p.terms_.push_back({pack(e), Rational(1)});
  return p;
}

std::vector<MPoly> MPoly::generators(std::vector<std::string> names) {
  const VariableList vars = make_variables(std::move(names));
  std::vector<MPoly> out;
  for (std::size_t i = 0; i < vars->size(); ++i) out.push_back(variable(vars, i));
  return out;
}

std::vector<std::string> MPoly::variable_names() const {
  return vars_ ? *vars_ : std::vector<std::string>{};
}

MPoly::Key MPoly::pack(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) {
    throw Error(Errc::kInvalidArgument, "at most 7 polynomial variables are supported");
  }
  Key key = 0;
  unsigned deg = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > kMaxDegree) throw Error(Errc::kInvalidArgument, "exponent exceeds 255");
    deg += exponents[i];
    key |= static_cast<Key>(exponents[i]) << (8 * (6 - i));
  }
  if (deg > kMaxDegree) throw Error(Errc::kInvalidArgument, "monomial degree exceeds 255");
  return key | (static_cast<Key>(deg) << 56);
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().key == 0);
}

Rational MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().key == 0) return terms_.back().coeff;
  return Rational(0);
}

unsigned MPoly::total_degree() const {
  return terms_.empty() ? 0 : degree(terms_.front().key);
}

unsigned MPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, exponent(t.key, var));
  return d;
}

Rational MPoly::coefficient(std::span<const unsigned> exponents) const {
  const Key key = pack(exponents);
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                                   [](const Term& t, Key k) { return t.key > k; });
  if (it != terms_.end() && it->key == key) return it->coeff;
  return Rational(0);
}

VariableList MPoly::unify(const MPoly& a, const MPoly& b) {
  if (!a.vars_) return b.vars_;
  if (!b.vars_) return a.vars_;
  if (same_variables(a.vars_, b.vars_)) return a.vars_;
  if (a.is_constant()) return b.vars_;
  if (b.is_constant()) return a.vars_;
  throw Error(Errc::kVariableMismatch, "polynomials declare different variable lists");
}

MPoly& MPoly::operator+=(const MPoly& o) {
  vars_ = unify(*this, o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->key > j->key)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->key > i->key) {
      out.push_back(*j++);
    } else {
      Rational c = i->coeff + j->coeff;
      if (!c.is_zero()) out.push_back({i->key, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void MPoly::scale(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return;
  }
  for (auto& t : terms_) t.coeff *= c;
}

MPoly& MPoly::operator*=(const Rational& c) {
  scale(c);
  return *this;
}

MPoly& MPoly::operator/=(const Rational& c) {
  scale(c.inverse());
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  r.vars_ = MPoly::unify(a, b);
  if (a.is_zero() || b.is_zero()) return r;
  if (a.is_constant()) {
    r.terms_ = b.terms_;
    r.scale(a.terms_.front().coeff);
    return r;
  }
  if (b.is_constant()) {
    r.terms_ = a.terms_;
    r.scale(b.terms_.front().coeff);
    return r;
  }
  const MPoly& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const MPoly& large = a.terms_.size() <= b.terms_.size() ? b : a;
  if (small.terms_.size() == 1) {
    const auto& s = small.terms_.front();
    r.terms_.reserve(large.terms_.size());
    for (const auto& t : large.terms_) r.terms_.push_back({multiply_keys(s.key, t.key), s.coeff * t.coeff});
    return r;
  }
  std::unordered_map<MPoly::Key, Rational, KeyHash> acc;
  acc.reserve(small.terms_.size() * large.terms_.size() / 2 + 16);
  mpq_class prod;
  for (const auto& s : small.terms_) {
    for (const auto& t : large.terms_) {
      mpq_mul(prod.get_mpq_t(), s.coeff.value().get_mpq_t(), t.coeff.value().get_mpq_t());
      auto [it, inserted] = acc.try_emplace(multiply_keys(s.key, t.key));
      if (inserted) {
        it->second = Rational(prod);
      } else {
        it->second += Rational(prod);
      }
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [k, c] : acc) {
    if (!c.is_zero()) r.terms_.push_back({k, std::move(c)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), [](const MPoly::Term& x, const MPoly::Term& y) { return x.key > y.key; });
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.is_constant() && a.vars_ && b.vars_ && !same_variables(a.vars_, b.vars_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

MPoly MPoly::pow(unsigned exponent) const {
  MPoly result(1);
  result.vars_ = vars_;
  MPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational MPoly::eval(std::span<const Rational> point) const {
  const std::size_t nvars = vars_ ? vars_->size() : 0;
  if (point.size() < nvars) throw Error(Errc::kInvalidArgument, "evaluation point has too few coordinates");
  // powers[i][e] = point[i]^e, filled lazily up to the largest exponent used.
  std::vector<std::vector<Rational>> powers(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    const unsigned d = degree_in(i);
    powers[i].reserve(d + 1);
    powers[i].push_back(Rational(1));
    for (unsigned e = 1; e <= d; ++e) powers[i].push_back(powers[i].back() * point[i]);
  }
  Rational sum;
  for (const auto& t : terms_) {
    Rational term = t.coeff;
    for (std::size_t i = 0; i < nvars; ++i) {
      const unsigned e = exponent(t.key, i);
      if (e > 0) term *= powers[i][e];
    }
    sum += term;
  }
  return sum;
}

Rational MPoly::eval(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> values;
  for (const auto& name : variable_names()) {
    const auto it = point.find(name);
    if (it == point.end()) throw Error(Errc::kInvalidArgument, "no value for variable '" + name + "'");
    values.push_back(it->second);
  }
  return eval(values);
}

MPoly MPoly::substitute(std::size_t var, const MPoly& value) const {
  if (!vars_ || var >= vars_->size()) throw Error(Errc::kInvalidArgument, "substitution variable out of range");
  // Group terms by the exponent of `var`, then combine with powers of value.
  std::map<unsigned, MPoly> groups;
  const Key var_unit = static_cast<Key>(1) << (8 * (6 - var));
  for (const auto& t : terms_) {
    const unsigned e = exponent(t.key, var);
    const Key stripped = t.key - e * var_unit - (static_cast<Key>(e) << 56);
    MPoly& g = groups[e];
    g.vars_ = vars_;
    g.terms_.push_back({stripped, t.coeff});
  }
  MPoly result;
  result.vars_ = vars_;
  MPoly power(1);
  power.vars_ = vars_;
  unsigned current = 0;
  for (auto& [e, g] : groups) {
    std::sort(g.terms_.begin(), g.terms_.end(), [](const Term& x, const Term& y) { return x.key > y.key; });
    while (current < e) {
      power *= value;
      ++current;
    }
    result += g * power;
  }
  result.vars_ = vars_;
  return result;
}

MPoly MPoly::substitute(const std::string& name, const MPoly& value) const {
  const auto names = variable_names();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw Error(Errc::kInvalidArgument, "unknown variable '" + name + "'");
  return substitute(static_cast<std::size_t>(it - names.begin()), value);
}

std::string MPoly::monomial_string(Key key) const {
  if (key == 0) return "1";
  std::string out;
  const std::size_t nvars = vars_ ? vars_->size() : 0;
  for (std::size_t i = 0; i < nvars; ++i) {
    const unsigned e = exponent(key, i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += (*vars_)[i];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    Rational c = t.coeff;
    if (i == 0) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    c = c.abs();
    if (t.key == 0) {
      out += c.to_string();
    } else {
      if (c != Rational(1)) out += c.to_string() + "*";
      out += monomial_string(t.key);
    }
  }
  return out;
}

MPoly inverse(const MPoly& p) {
  if (!p.is_constant() || p.is_zero()) {
    throw Error(Errc::kNotInvertible, "polynomial " + p.to_string() + " is not a nonzero constant");
  }
  return MPoly(p.constant_term().inverse());
}

}  // namespace momentcf
