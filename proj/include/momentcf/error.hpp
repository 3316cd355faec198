#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace momentcf {

enum class Errc {
  kInvalidArgument,
  kParse,
  kDivisionByZero,
  kNotInvertible,
  kVariableMismatch,
  kNonInvertibleConstantTerm,
  kNonzeroConstantTermInComposition,
  kDenominatorParameterPole,
  kInsufficientDepth,
  kNonInvertibleDenominator,
  kSingularHankel,
  kZeroAlphaCoefficient,
  kDegreeExceedsMoments,
  kParameterPole,
  kOddIndex,
  kNonIntegerN,
};

std::string_view errc_name(Errc code);

/// Every failure raised by the library. `code()` identifies the condition;
/// `what()` names the offending quantity.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace momentcf
