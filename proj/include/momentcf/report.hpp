#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "momentcf/mpoly.hpp"
#include "momentcf/rational.hpp"
#include "momentcf/series.hpp"
#include "momentcf/upoly.hpp"

namespace momentcf {

inline std::string describe(const Rational& v) { return v.to_string(); }
inline std::string describe(const MPoly& v) { return v.to_string(); }
inline std::string describe(long v) { return std::to_string(v); }
template <class R>
std::string describe(const std::vector<R>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + describe(v[i]);
  return out + "]";
}
template <class R>
std::string describe(const TruncSeries<R>& s) {
  return describe(s.coeffs());
}
template <class R>
std::string describe(const UPoly<R>& p) {
  return to_string(p, "x", [](const R& c) { return describe(c); });
}

/// Outcome of one named verification: pass/fail, how many cases ran, and the
/// first counterexample on failure.
struct CheckReport {
  std::string id;
  bool passed = true;
  std::size_t cases = 0;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> notes;
  std::optional<std::string> counterexample;
  /// Short text shown after PASS instead of the case count.
  std::optional<std::string> headline;

  /// Records one case; the first failing case becomes the counterexample.
  bool expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      if (passed) counterexample = what;
      passed = false;
    }
    return ok;
  }

  template <class A, class B>
  bool expect_equal(const A& got, const B& want, const std::string& what) {
    const bool ok = got == want;
    if (ok) {
      ++cases;
      return true;
    }
    return expect(false, what + ": got " + describe(got) + ", expected " + describe(want));
  }

  void note(std::string text) { notes.push_back(std::move(text)); }

  /// Folds a sub-report into this one, prefixing its counterexample.
  void absorb(const CheckReport& sub) {
    cases += sub.cases;
    for (const auto& n : sub.notes) notes.push_back(sub.id.empty() ? n : sub.id + ": " + n);
    if (!sub.passed) {
      if (passed) counterexample = (sub.id.empty() ? "" : sub.id + ": ") + sub.counterexample.value_or("failed");
      passed = false;
    }
  }

  /// "PASS (<headline or case count>)" or "FAIL (first counterexample: ...)".
  std::string verdict() const {
    if (passed) return "PASS (" + headline.value_or(std::to_string(cases) + " cases") + ")";
    return "FAIL (first counterexample: " + counterexample.value_or("none recorded") + ")";
  }

  std::string summary() const {
    std::ostringstream os;
    os << (passed ? "PASS" : "FAIL") << " " << id << " (" << cases << " cases)";
    if (!passed && counterexample) os << " first counterexample: " << *counterexample;
    return os.str();
  }
};

}  // namespace momentcf
