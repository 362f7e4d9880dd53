#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "hbf/exactcore/big_rational.hpp"

namespace hbf {

/// Binary precision (bits) carrying `digits` decimal digits.
mpfr_prec_t bits_for_digits(int digits);

/// RAII value type over an MPFR number. The result of a binary operation
/// carries the larger precision of its operands; every operation rounds to
/// nearest. The process uses the widest exponent range MPFR supports so
/// that quantities like exp(-1e10) stay representable.
class Real {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 128;

  Real() : Real(0L, kDefaultPrecision) {}
  explicit Real(mpfr_prec_t precision);
  Real(long value, mpfr_prec_t precision);
  Real(int value, mpfr_prec_t precision) : Real(static_cast<long>(value), precision) {}
  Real(double value, mpfr_prec_t precision);
  Real(const BigRational& value, mpfr_prec_t precision, mpfr_rnd_t rounding = MPFR_RNDN);
  Real(std::string_view decimal, mpfr_prec_t precision);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  /// Same number rounded to another precision.
  Real with_precision(mpfr_prec_t precision, mpfr_rnd_t rounding = MPFR_RNDN) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Exact conversion; the value must be finite.
  BigRational to_rational() const;
  /// Scientific notation with `significant` digits.
  std::string to_scientific(int significant, mpfr_rnd_t rounding = MPFR_RNDN) const;
  /// Fixed notation with `decimals` digits after the point.
  std::string to_fixed(int decimals, mpfr_rnd_t rounding = MPFR_RNDN) const;
  /// floor(log10|x|) for nonzero finite x; a large negative number for zero.
  long decimal_exponent() const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator+(Real a, long b);
  friend Real operator-(Real a, long b);
  friend Real operator*(Real a, long b);
  friend Real operator/(Real a, long b);
  friend Real operator-(long a, const Real& b);
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real log10(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real ceil(const Real& x);
Real floor(const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

Real pi(mpfr_prec_t precision);
/// 10^e rounded in the given direction.
Real pow10(long e, mpfr_prec_t precision, mpfr_rnd_t rounding = MPFR_RNDN);
/// |x| * 2^(1 - precision(x)): one unit of rounding relative to x.
Real ulp_bound(const Real& x);

}  // namespace hbf
