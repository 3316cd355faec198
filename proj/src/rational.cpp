#include "momentcf/rational.hpp"

#include <cctype>
#include <limits>

#include "momentcf/error.hpp"

namespace momentcf {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kParse: return "ParseError";
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kNotInvertible: return "NotInvertible";
    case Errc::kVariableMismatch: return "VariableMismatch";
    case Errc::kNonInvertibleConstantTerm: return "NonInvertibleConstantTerm";
    case Errc::kNonzeroConstantTermInComposition: return "NonzeroConstantTermInComposition";
    case Errc::kDenominatorParameterPole: return "DenominatorParameterPole";
    case Errc::kInsufficientDepth: return "InsufficientDepth";
    case Errc::kNonInvertibleDenominator: return "NonInvertibleDenominator";
    case Errc::kSingularHankel: return "SingularHankel";
    case Errc::kZeroAlphaCoefficient: return "ZeroAlphaCoefficient";
    case Errc::kDegreeExceedsMoments: return "DegreeExceedsMoments";
    case Errc::kParameterPole: return "ParameterPole";
    case Errc::kOddIndex: return "OddIndex";
    case Errc::kNonIntegerN: return "NonIntegerN";
  }
  return "Unknown";
}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(Errc::kDivisionByZero, "rational with zero denominator");
  v_ = mpq_class(numerator, denominator);
  v_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw Error(Errc::kParse, "not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw Error(Errc::kDivisionByZero, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(parse_integer(num), d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::optional<long> Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p()) return std::nullopt;
  return v_.get_num().get_si();
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::kDivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::kDivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

Rational factorial(long n) {
  if (n < 0) throw Error(Errc::kInvalidArgument, "factorial of a negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

}  // namespace momentcf
