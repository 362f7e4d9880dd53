#include "hbf/functions/quadrature.hpp"

#include <cmath>
#include <optional>

namespace hbf::quadrature {

namespace {

using NodeEval = std::function<std::optional<PrecisionReal>(const Real& t)>;

/// Walks the nodes j*h*direction for j = first, first+stride, ... and adds
/// the weighted integrand values into `sum`.
void walk(const NodeEval& node, const Real& h, long first, long stride, int direction, double t_cut,
          double t_cap, const Real& small, PrecisionReal& sum, std::size_t& evaluations) {
  for (long j = first;; j += stride) {
    Real t = h * j;
    if (direction < 0) t = -t;
    const double at = std::fabs(t.to_double());
    if (at > t_cap) return;
    auto v = node(t);
    ++evaluations;
    if (!v) return;
    sum = sum + *v;
    if (at >= t_cut && abs(v->value) * h <= small) return;
  }
}

Result run(const NodeEval& node, const Options& o) {
  const mpfr_prec_t bits = bits_for_digits(o.digits + 15);
  const double scaled = 2.0 * (o.digits + 5) * std::log(10.0) / M_PI;
  const double t_cut = std::asinh(scaled);
  const double t_cap = std::asinh(8.0 * scaled);
  const Real small = pow10(-(o.digits + 8), 64);
  const Real target = tolerance(o.digits);

  Result result;
  PrecisionReal sum = PrecisionReal::exact(0L, bits);
  std::optional<PrecisionReal> previous;
  for (int level = 0; level <= o.max_level; ++level) {
    Real h(bits);
    mpfr_set_ui_2exp(h.get(), 1, -level, MPFR_RNDN);
    if (level == 0) {
      if (auto v = node(Real(0L, bits))) sum = sum + *v;
      ++result.evaluations;
      walk(node, h, 1, 1, +1, t_cut, t_cap, small, sum, result.evaluations);
      walk(node, h, 1, 1, -1, t_cut, t_cap, small, sum, result.evaluations);
    } else {
      walk(node, h, 1, 2, +1, t_cut, t_cap, small, sum, result.evaluations);
      walk(node, h, 1, 2, -1, t_cut, t_cap, small, sum, result.evaluations);
    }
    PrecisionReal current = sum * PrecisionReal::exact(h);
    result.levels = level;
    if (previous) {
      Real diff = abs(current.value - previous->value);
      Real spread = mul_up(diff, Real(o.safety_factor, 64));
      PrecisionReal estimate = current;
      estimate.widen(spread);
      estimate.working_digits = o.digits;
      result.estimate = estimate;
      if (level >= o.min_level && spread <= target) {
        result.converged = true;
        return result;
      }
    } else {
      result.estimate = current;
      result.estimate.working_digits = o.digits;
    }
    previous = current;
  }
  return result;
}

}  // namespace

Result tanh_sinh(const FiniteIntegrand& f, const Real& a, const Real& b, const Options& options) {
  const mpfr_prec_t bits = bits_for_digits(options.digits + 15);
  const Real lo = a.with_precision(std::max(bits, a.precision()));
  const Real hi = b.with_precision(std::max(bits, b.precision()));
  const Real width = hi - lo;
  const Real half_pi = pi(bits) / 2L;
  NodeEval node = [&](const Real& t) -> std::optional<PrecisionReal> {
    const Real u = half_pi * sinh(t);
    const Real e2u = exp(u * 2L);
    const Real from_a = width / (1L / e2u + 1L);
    const Real to_b = width / (e2u + 1L);
    if (from_a.is_zero() || to_b.is_zero() || !from_a.is_finite() || !to_b.is_finite()) return std::nullopt;
    const Real x = t.sign() < 0 ? lo + from_a : hi - to_b;
    const Real ch = cosh(u);
    // (b-a)/2 * (pi/2) cosh t / cosh^2 u
    Real w = width / 2L * half_pi * cosh(t) / (ch * ch);
    PrecisionReal weight = PrecisionReal::exact(w);
    weight.widen(ulp_bound(w) * Real(16L, 64));
    PrecisionReal fx = f(x, from_a, to_b);
    if (!fx.value.is_finite() || !fx.abs_error.is_finite()) return std::nullopt;
    return fx * weight;
  };
  return run(node, options);
}

Result exp_sinh(const HalfLineIntegrand& f, const Options& options) {
  const mpfr_prec_t bits = bits_for_digits(options.digits + 15);
  const Real half_pi = pi(bits) / 2L;
  NodeEval node = [&](const Real& t) -> std::optional<PrecisionReal> {
    const Real x = exp(half_pi * sinh(t));
    if (x.is_zero() || !x.is_finite()) return std::nullopt;
    Real w = half_pi * cosh(t) * x;
    PrecisionReal weight = PrecisionReal::exact(w);
    weight.widen(ulp_bound(w) * Real(16L, 64));
    PrecisionReal fx = f(x);
    if (!fx.value.is_finite() || !fx.abs_error.is_finite()) return std::nullopt;
    return fx * weight;
  };
  return run(node, options);
}

}  // namespace hbf::quadrature
