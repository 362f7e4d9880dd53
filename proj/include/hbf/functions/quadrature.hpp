#pragma once

#include <cstddef>
#include <functional>

#include "hbf/functions/precision_real.hpp"

namespace hbf::quadrature {

struct Options {
  int digits = 30;    ///< absolute accuracy target 10^-digits
  int max_level = 12; ///< finest step is 2^-max_level
  int min_level = 3;
  /// Multiplier on the difference of the two finest levels.
  long safety_factor = 10;
};

struct Result {
  PrecisionReal estimate;
  int levels = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Integrand on a finite interval [a, b]. Receives the abscissa and its
/// distances to both endpoints, each computed without cancellation, so
/// endpoint singularities can be written in terms of the distances.
using FiniteIntegrand =
    std::function<PrecisionReal(const Real& x, const Real& from_a, const Real& to_b)>;

/// Integrand on [0, inf).
using HalfLineIntegrand = std::function<PrecisionReal(const Real& x)>;

/// Tanh-sinh rule on [a, b].
Result tanh_sinh(const FiniteIntegrand& f, const Real& a, const Real& b, const Options& options);

/// Exp-sinh rule on [0, inf); suited to exponential or algebraic decay and
/// to integrable singularities at 0.
Result exp_sinh(const HalfLineIntegrand& f, const Options& options);

}  // namespace hbf::quadrature
