#include <string>

#include "hbf/certify/certify.hpp"
#include "hbf/errors.hpp"
#include "hbf/functions/functions.hpp"

namespace hbf::certify {

namespace {

constexpr int kRefineSteps = 60;

bool below(const PrecisionReal& a, const PrecisionReal& b) { return a.value < b.value; }

}  // namespace

PhiMinimum phi_minimum(const BigRational& alpha, const BigRational& s_max, int digits) {
  if (s_max.sign() <= 0) throw DomainError("s_max must be positive");
  const functions::PhiSeries series(alpha, s_max, digits);
  const BigRational step(1, 4);
  const long count = (s_max / step).ceil().get_si();

  std::vector<BigRational> grid;
  std::vector<PrecisionReal> values;
  PhiMinimum best{BigRational(0), series.value(BigRational(0))};
  for (long i = 1; i <= count; ++i) {
    const BigRational s = std::min(step * BigRational(i), s_max);
    PrecisionReal v = series.value(s);
    if (v.certainly_negative()) return {s, v};
    if (below(v, best.value)) best = {s, v};
    grid.push_back(s);
    values.push_back(std::move(v));
  }

  // refine every interior local minimum of the grid values
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    if (below(values[i - 1], values[i]) || below(values[i + 1], values[i])) continue;
    BigRational lo = grid[i - 1];
    BigRational hi = grid[i + 1];
    if (!series.derivative(lo).certainly_negative() || !series.derivative(hi).certainly_positive()) continue;
    for (int k = 0; k < kRefineSteps; ++k) {
      const BigRational mid = (lo + hi) / BigRational(2);
      const PrecisionReal d = series.derivative(mid);
      if (d.certainly_negative()) {
        lo = mid;
      } else if (d.certainly_positive()) {
        hi = mid;
      } else {
        break;
      }
    }
    const BigRational s = (lo + hi) / BigRational(2);
    PrecisionReal v = series.value(s);
    if (v.certainly_negative()) return {s, v};
    if (below(v, best.value)) best = {s, std::move(v)};
  }
  return best;
}

AlphaStarEstimate estimate_alpha_star(const EvalRequest& req, const BigRational& s_max) {
  req.validate();
  const int digits = req.precision_digits + 10;
  auto sign_of_min = [&](const BigRational& alpha, PhiMinimum& m) {
    m = phi_minimum(alpha, s_max, digits);
    if (m.value.certainly_negative()) return -1;
    if (m.value.certainly_positive()) return 1;
    throw PrecisionError("sign of min phi at alpha = " + alpha.to_string() + " is unresolved at " +
                         std::to_string(digits) + " digits");
  };

  AlphaStarEstimate out;
  out.lower = BigRational(9, 4);
  out.upper = BigRational(47, 20);
  PhiMinimum m;
  if (sign_of_min(out.lower, m) < 0) throw PrecisionError("min phi is negative at the lower seed 9/4");
  if (sign_of_min(out.upper, m) > 0) throw PrecisionError("min phi is positive at the upper seed 47/20");
  out.witness_s = m.s;
  out.witness_value = m.value;

  const BigRational width = BigRational(1, 10).pow(req.precision_digits);
  while (out.upper - out.lower > width) {
    const BigRational mid = (out.lower + out.upper) / BigRational(2);
    ++out.steps;
    if (sign_of_min(mid, m) > 0) {
      out.lower = mid;
    } else {
      out.upper = mid;
      out.witness_s = m.s;
      out.witness_value = m.value;
    }
  }
  const mpfr_prec_t bits = req.working_bits();
  out.value = PrecisionReal::from_rational((out.lower + out.upper) / BigRational(2), bits);
  out.value.widen(Real((out.upper - out.lower) / BigRational(2), 64, MPFR_RNDU));
  out.value.working_digits = req.precision_digits;
  return out;
}

}  // namespace hbf::certify
