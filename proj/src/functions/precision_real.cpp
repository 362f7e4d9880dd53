#include "hbf/functions/precision_real.hpp"

#include "hbf/errors.hpp"

namespace hbf {

namespace {

constexpr mpfr_prec_t kErrorBits = 64;

Real abs_up(const Real& a) {
  Real r(kErrorBits);
  mpfr_abs(r.get(), a.get(), MPFR_RNDU);
  return r;
}

Real abs_down(const Real& a) {
  Real r(kErrorBits);
  mpfr_abs(r.get(), a.get(), MPFR_RNDD);
  return r;
}

Real sub_down(const Real& a, const Real& b) {
  Real r(kErrorBits);
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDD);
  return r;
}

PrecisionReal make(Real v, Real err, const PrecisionReal& a) {
  err = add_up(err, ulp_bound(v));
  return PrecisionReal(std::move(v), std::move(err), a.working_digits);
}

PrecisionReal make(Real v, Real err, const PrecisionReal& a, const PrecisionReal& b) {
  err = add_up(err, ulp_bound(v));
  return PrecisionReal(std::move(v), std::move(err), std::max(a.working_digits, b.working_digits));
}

}  // namespace

Real add_up(const Real& a, const Real& b) {
  Real r(kErrorBits);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real mul_up(const Real& a, const Real& b) {
  Real r(kErrorBits);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real div_up(const Real& a, const Real& b) {
  Real r(kErrorBits);
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

PrecisionReal::PrecisionReal(Real v, Real err, int digits)
    : value(std::move(v)), abs_error(abs_up(err)), working_digits(digits) {}

PrecisionReal PrecisionReal::exact(Real v) {
  const int digits = static_cast<int>(static_cast<double>(v.precision()) / 3.3219280948873626);
  return PrecisionReal(std::move(v), Real(0L, kErrorBits), digits);
}

PrecisionReal PrecisionReal::exact(long v, mpfr_prec_t precision) { return exact(Real(v, precision)); }

PrecisionReal PrecisionReal::from_rational(const BigRational& q, mpfr_prec_t precision) {
  Real v(q, precision);
  Real err = ulp_bound(v);
  PrecisionReal r = exact(std::move(v));
  r.abs_error = err;
  return r;
}

Real PrecisionReal::lower() const {
  Real r(value.precision());
  mpfr_sub(r.get(), value.get(), abs_error.get(), MPFR_RNDD);
  return r;
}

Real PrecisionReal::upper() const {
  Real r(value.precision());
  mpfr_add(r.get(), value.get(), abs_error.get(), MPFR_RNDU);
  return r;
}

bool PrecisionReal::meets(int digits) const { return abs_error <= tolerance(digits); }

bool PrecisionReal::overlaps(const PrecisionReal& other) const {
  return !(upper() < other.lower() || other.upper() < lower());
}

PrecisionReal& PrecisionReal::widen(const Real& extra) {
  abs_error = add_up(abs_error, abs_up(extra));
  return *this;
}

PrecisionReal operator+(const PrecisionReal& a, const PrecisionReal& b) {
  return make(a.value + b.value, add_up(a.abs_error, b.abs_error), a, b);
}

PrecisionReal operator-(const PrecisionReal& a, const PrecisionReal& b) {
  return make(a.value - b.value, add_up(a.abs_error, b.abs_error), a, b);
}

PrecisionReal operator*(const PrecisionReal& a, const PrecisionReal& b) {
  // |a|eb + |b|ea + ea eb
  Real err = add_up(add_up(mul_up(abs_up(a.value), b.abs_error), mul_up(abs_up(b.value), a.abs_error)),
                    mul_up(a.abs_error, b.abs_error));
  return make(a.value * b.value, std::move(err), a, b);
}

PrecisionReal operator/(const PrecisionReal& a, const PrecisionReal& b) {
  const Real b_low = sub_down(abs_down(b.value), b.abs_error);
  if (b_low <= 0L) throw PrecisionError("division by a ball containing zero");
  // (ea + |a/b| eb) / (|b| - eb); the slack factor covers the rounding of a/b
  Real q = a.value / b.value;
  Real slack(kErrorBits);
  mpfr_set_ui_2exp(slack.get(), (1UL << 50) + 1, -50, MPFR_RNDU);
  const Real num = add_up(a.abs_error, mul_up(mul_up(abs_up(q), slack), b.abs_error));
  return make(std::move(q), div_up(num, b_low), a, b);
}

PrecisionReal operator-(const PrecisionReal& a) { return PrecisionReal(-a.value, a.abs_error, a.working_digits); }

PrecisionReal operator+(const PrecisionReal& a, long b) { return make(a.value + b, a.abs_error, a); }
PrecisionReal operator-(const PrecisionReal& a, long b) { return make(a.value - b, a.abs_error, a); }
PrecisionReal operator-(long a, const PrecisionReal& b) { return make(a - b.value, b.abs_error, b); }

PrecisionReal operator*(const PrecisionReal& a, long b) {
  Real factor(b < 0 ? -b : b, kErrorBits);
  return make(a.value * b, mul_up(a.abs_error, factor), a);
}

PrecisionReal operator/(const PrecisionReal& a, long b) {
  if (b == 0) throw DomainError("division by zero");
  Real factor(b < 0 ? -b : b, kErrorBits);
  return make(a.value / b, div_up(a.abs_error, factor), a);
}

PrecisionReal operator/(long a, const PrecisionReal& b) {
  return PrecisionReal::exact(a, b.precision()) / b;
}

PrecisionReal exp(const PrecisionReal& x) {
  Real v = exp(x.value);
  // e^x (e^eps - 1)
  Real growth(kErrorBits);
  mpfr_expm1(growth.get(), x.abs_error.get(), MPFR_RNDU);
  return make(v, mul_up(abs_up(v), growth), x);
}

PrecisionReal expm1(const PrecisionReal& x) {
  Real v = expm1(x.value);
  Real growth(kErrorBits);
  mpfr_expm1(growth.get(), x.abs_error.get(), MPFR_RNDU);
  Real scale(kErrorBits);
  mpfr_exp(scale.get(), x.value.get(), MPFR_RNDU);
  return make(v, mul_up(scale, growth), x);
}

PrecisionReal log(const PrecisionReal& x) {
  const Real low = sub_down(x.value, x.abs_error);
  if (!(low > 0L)) throw PrecisionError("logarithm of a ball that is not strictly positive");
  return make(log(x.value), div_up(x.abs_error, low), x);
}

PrecisionReal log1p(const PrecisionReal& x) {
  Real low(kErrorBits);
  mpfr_add_ui(low.get(), sub_down(x.value, x.abs_error).get(), 1, MPFR_RNDD);
  if (!(low > 0L)) throw PrecisionError("log1p of a ball reaching -1");
  return make(log1p(x.value), div_up(x.abs_error, low), x);
}

PrecisionReal sin(const PrecisionReal& x) { return make(sin(x.value), x.abs_error, x); }
PrecisionReal cos(const PrecisionReal& x) { return make(cos(x.value), x.abs_error, x); }

PrecisionReal sqrt(const PrecisionReal& x) {
  if (x.value.sign() < 0 || sub_down(x.value, x.abs_error) < 0L) {
    throw PrecisionError("square root of a ball reaching below zero");
  }
  Real v = sqrt(x.value);
  if (v.is_zero()) return make(v, x.abs_error, x);
  Real root_low(kErrorBits);
  mpfr_sqrt(root_low.get(), x.value.get(), MPFR_RNDD);
  return make(v, div_up(x.abs_error, root_low), x);
}

PrecisionReal square(const PrecisionReal& x) { return x * x; }

PrecisionReal abs(const PrecisionReal& x) { return PrecisionReal(abs(x.value), x.abs_error, x.working_digits); }

PrecisionReal pi_ball(mpfr_prec_t precision) {
  Real p = pi(precision);
  Real err = ulp_bound(p);
  PrecisionReal r = PrecisionReal::exact(std::move(p));
  r.abs_error = err;
  return r;
}

void EvalRequest::validate() const {
  if (precision_digits < 1) throw DomainError("precision_digits must be at least 1");
  if (max_terms && *max_terms == 0) throw DomainError("max_terms must be positive");
  if (quadrature_level && *quadrature_level < 1) throw DomainError("quadrature_level must be positive");
}

mpfr_prec_t EvalRequest::working_bits(int extra_digits) const {
  return bits_for_digits(precision_digits + 15 + extra_digits);
}

EvalRequest EvalRequest::with_digits(int digits) const {
  EvalRequest r = *this;
  r.precision_digits = digits;
  return r;
}

Real tolerance(int digits) { return pow10(-digits, kErrorBits, MPFR_RNDD); }

}  // namespace hbf
