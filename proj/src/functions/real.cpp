#include "hbf/functions/real.hpp"

#include <cmath>
#include <string>

#include "hbf/errors.hpp"

namespace hbf {

namespace {

void widen_exponent_range() {
  static const bool done = [] {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
    return true;
  }();
  (void)done;
}

mpfr_prec_t clamp_precision(mpfr_prec_t p) { return p < MPFR_PREC_MIN ? MPFR_PREC_MIN : p; }

template <typename Op>
Real unary(const Real& x, Op op) {
  Real r(x.precision());
  op(r.get(), x.get(), MPFR_RNDN);
  return r;
}

std::string print(const char* fmt, int digits, mpfr_srcptr v) {
  char* buffer = nullptr;
  if (mpfr_asprintf(&buffer, fmt, digits, v) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

}  // namespace

mpfr_prec_t bits_for_digits(int digits) {
  return clamp_precision(static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 8);
}

Real::Real(mpfr_prec_t precision) {
  widen_exponent_range();
  mpfr_init2(value_, clamp_precision(precision));
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t precision) : Real(precision) { mpfr_set_si(value_, value, MPFR_RNDN); }

Real::Real(double value, mpfr_prec_t precision) : Real(precision) { mpfr_set_d(value_, value, MPFR_RNDN); }

Real::Real(const BigRational& value, mpfr_prec_t precision, mpfr_rnd_t rounding) : Real(precision) {
  mpfr_set_q(value_, value.raw().get_mpq_t(), rounding);
}

Real::Real(std::string_view decimal, mpfr_prec_t precision) : Real(precision) {
  const std::string s(decimal);
  char* end = nullptr;
  if (mpfr_strtofr(value_, s.c_str(), &end, 10, MPFR_RNDN), end == s.c_str() || *end != '\0') {
    throw DomainError("malformed real literal: '" + s + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_precision(mpfr_prec_t precision, mpfr_rnd_t rounding) const {
  Real r(precision);
  mpfr_set(r.value_, value_, rounding);
  return r;
}

BigRational Real::to_rational() const {
  if (!is_finite()) throw DomainError("cannot convert a non-finite value to a rational");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return BigRational(std::move(q));
}

std::string Real::to_scientific(int significant, mpfr_rnd_t rounding) const {
  const int decimals = significant > 1 ? significant - 1 : 0;
  switch (rounding) {
    case MPFR_RNDU:
      return print("%.*RUe", decimals, value_);
    case MPFR_RNDD:
      return print("%.*RDe", decimals, value_);
    default:
      return print("%.*RNe", decimals, value_);
  }
}

std::string Real::to_fixed(int decimals, mpfr_rnd_t rounding) const {
  switch (rounding) {
    case MPFR_RNDU:
      return print("%.*RUf", decimals, value_);
    case MPFR_RNDD:
      return print("%.*RDf", decimals, value_);
    default:
      return print("%.*RNf", decimals, value_);
  }
}

long Real::decimal_exponent() const {
  if (is_zero() || !is_finite()) return -1000000000L;
  Real l(64L);
  mpfr_abs(l.value_, value_, MPFR_RNDN);
  mpfr_log10(l.value_, l.value_, MPFR_RNDD);
  return mpfr_get_si(l.value_, MPFR_RNDD);
}

Real& Real::operator+=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const { return unary(*this, mpfr_neg); }

Real operator+(Real a, long b) {
  mpfr_add_si(a.value_, a.value_, b, MPFR_RNDN);
  return a;
}
Real operator-(Real a, long b) {
  mpfr_sub_si(a.value_, a.value_, b, MPFR_RNDN);
  return a;
}
Real operator*(Real a, long b) {
  mpfr_mul_si(a.value_, a.value_, b, MPFR_RNDN);
  return a;
}
Real operator/(Real a, long b) {
  mpfr_div_si(a.value_, a.value_, b, MPFR_RNDN);
  return a;
}
Real operator-(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_sub(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}
Real operator/(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_div(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real log10(const Real& x) { return unary(x, mpfr_log10); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }
Real tanh(const Real& x) { return unary(x, mpfr_tanh); }

Real pow(const Real& x, const Real& y) {
  Real r(std::max(x.precision(), y.precision()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real ceil(const Real& x) {
  Real r(x.precision());
  mpfr_ceil(r.get(), x.get());
  return r;
}

Real floor(const Real& x) {
  Real r(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real pi(mpfr_prec_t precision) {
  Real r(precision);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real pow10(long e, mpfr_prec_t precision, mpfr_rnd_t rounding) {
  Real r(precision);
  if (e >= 0) {
    mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(e), rounding);
    return r;
  }
  const mpfr_rnd_t inverse = rounding == MPFR_RNDU ? MPFR_RNDD : (rounding == MPFR_RNDD ? MPFR_RNDU : rounding);
  mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(-e), inverse);
  mpfr_ui_div(r.get(), 1, r.get(), rounding);
  return r;
}

Real ulp_bound(const Real& x) {
  Real r(64L);
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  mpfr_mul_2si(r.get(), r.get(), 1 - static_cast<long>(x.precision()), MPFR_RNDU);
  return r;
}

}  // namespace hbf
