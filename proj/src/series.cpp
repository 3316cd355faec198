#include "momentcf/series.hpp"

namespace momentcf {

TruncSeries<Rational> trig_arg(TrigArg kind, std::size_t order) {
  switch (kind) {
    case TrigArg::kSinHalfSquared: {
      // sin²(t/2) = (1 - cos t)/2
      TruncSeries<Rational> s = cos_linear(Rational(1), order).scaled(Rational(-1, 2));
      s[0] += Rational(1, 2);
      return s;
    }
    case TrigArg::kTwoSinHalf:
      return sin_linear(Rational(1, 2), order).scaled(Rational(2));
    case TrigArg::kOneMinusExpNeg: {
      TruncSeries<Rational> s = -exp_linear(Rational(-1), order);
      s[0] += Rational(1);
      return s;
    }
  }
  throw Error(Errc::kInvalidArgument, "unknown trig argument");
}

}  // namespace momentcf
