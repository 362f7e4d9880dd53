#pragma once

#include <string>

#include "hbf/exactcore/big_rational.hpp"
#include "hbf/functions/precision_real.hpp"

namespace hbf::test {

inline BigRational Q(const char* text) { return BigRational::parse(text); }

/// |v - ref| <= abs_error(v) + 10^-slack, with ref a decimal literal.
inline bool agrees(const PrecisionReal& v, const char* ref, int slack) {
  const Real r(std::string(ref), v.precision() + 64);
  const Real gap = abs(v.value - r);
  return gap <= add_up(v.abs_error, tolerance(slack));
}

/// Two balls agree within their combined radius plus 10^-slack.
inline bool agrees(const PrecisionReal& a, const PrecisionReal& b, int slack) {
  const Real gap = abs(a.value - b.value);
  return gap <= add_up(add_up(a.abs_error, b.abs_error), tolerance(slack));
}

inline double err(const PrecisionReal& v) { return v.abs_error.to_double(); }

}  // namespace hbf::test
