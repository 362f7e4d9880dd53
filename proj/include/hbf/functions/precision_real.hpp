#pragma once

#include <optional>
#include <string>

#include "hbf/functions/real.hpp"

namespace hbf {

/// A value together with an upper bound on its distance to the true
/// quantity it approximates. Arithmetic on PrecisionReal is midpoint-radius
/// ball arithmetic: the radius absorbs input radii and the rounding of the
/// midpoint, with the radius itself rounded upward.
struct PrecisionReal {
  Real value;
  Real abs_error{0L, 64};
  int working_digits = 0;

  PrecisionReal() = default;
  PrecisionReal(Real v, Real err, int digits);

  /// An exactly known value (radius zero).
  static PrecisionReal exact(Real v);
  static PrecisionReal exact(long v, mpfr_prec_t precision);
  /// Rational rounded to `precision`, radius covering the rounding.
  static PrecisionReal from_rational(const BigRational& q, mpfr_prec_t precision);

  mpfr_prec_t precision() const { return value.precision(); }

  /// value - abs_error rounded down / value + abs_error rounded up.
  Real lower() const;
  Real upper() const;

  bool certainly_positive() const { return lower() > 0L; }
  bool certainly_negative() const { return upper() < 0L; }
  /// True when abs_error <= 10^(-digits).
  bool meets(int digits) const;
  /// True when the two balls intersect.
  bool overlaps(const PrecisionReal& other) const;

  /// Widens the radius by `extra` (rounded upward).
  PrecisionReal& widen(const Real& extra);

  std::string value_string(int significant) const { return value.to_scientific(significant); }
  std::string error_string() const { return abs_error.to_scientific(3, MPFR_RNDU); }
};

PrecisionReal operator+(const PrecisionReal& a, const PrecisionReal& b);
PrecisionReal operator-(const PrecisionReal& a, const PrecisionReal& b);
PrecisionReal operator*(const PrecisionReal& a, const PrecisionReal& b);
/// Throws PrecisionError when the divisor ball contains zero.
PrecisionReal operator/(const PrecisionReal& a, const PrecisionReal& b);
PrecisionReal operator-(const PrecisionReal& a);
PrecisionReal operator+(const PrecisionReal& a, long b);
PrecisionReal operator-(const PrecisionReal& a, long b);
PrecisionReal operator-(long a, const PrecisionReal& b);
PrecisionReal operator*(const PrecisionReal& a, long b);
PrecisionReal operator/(const PrecisionReal& a, long b);
PrecisionReal operator/(long a, const PrecisionReal& b);

PrecisionReal exp(const PrecisionReal& x);
PrecisionReal expm1(const PrecisionReal& x);
/// Throws PrecisionError unless the ball lies in (0, inf).
PrecisionReal log(const PrecisionReal& x);
/// Throws PrecisionError unless the ball lies in (-1, inf).
PrecisionReal log1p(const PrecisionReal& x);
PrecisionReal sin(const PrecisionReal& x);
PrecisionReal cos(const PrecisionReal& x);
PrecisionReal sqrt(const PrecisionReal& x);
PrecisionReal square(const PrecisionReal& x);
PrecisionReal abs(const PrecisionReal& x);
PrecisionReal pi_ball(mpfr_prec_t precision);

/// Upper-rounded helpers for radius bookkeeping.
Real add_up(const Real& a, const Real& b);
Real mul_up(const Real& a, const Real& b);
Real div_up(const Real& a, const Real& b);

/// Accuracy request for function evaluation.
struct EvalRequest {
  int precision_digits = 30;
  std::optional<std::size_t> max_terms;
  std::optional<int> quadrature_level;

  /// Throws DomainError when precision_digits < 1.
  void validate() const;
  /// precision_digits plus 15 guard digits, in bits.
  mpfr_prec_t working_bits(int extra_digits = 0) const;
  /// The same request at a different digit count.
  EvalRequest with_digits(int digits) const;
};

/// 10^(-digits) rounded down.
Real tolerance(int digits);

}  // namespace hbf
