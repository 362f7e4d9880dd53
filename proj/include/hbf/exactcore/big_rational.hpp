#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hbf {

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Arithmetic never rounds.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(long num, long den);
  BigRational(const mpz_class& num, const mpz_class& den);
  explicit BigRational(const mpz_class& integer) : q_(integer) {}
  explicit BigRational(mpq_class q);

  /// Parses "p/q", an integer, or a decimal literal such as "2.188585",
  /// "-0.5" or "1e-3". Decimal input is converted exactly. Throws
  /// DomainError on malformed input or a zero denominator.
  static BigRational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  BigRational abs() const;
  BigRational inverse() const;

  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Canonical "numerator/denominator" form; integers are written "n/1".
  std::string to_string() const;
  /// Rounded decimal with `digits` places after the point (round half away from zero).
  std::string to_decimal(int digits) const;
  double to_double() const { return q_.get_d(); }

  /// Integer power (exponent may be negative for nonzero values).
  BigRational pow(long exponent) const;

  /// Smallest integer >= this value.
  mpz_class ceil() const;
  /// Largest integer <= this value.
  mpz_class floor() const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

/// n! as an exact integer.
mpz_class factorial(unsigned long n);
/// Binomial coefficient C(n, k) as an exact integer.
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace hbf
