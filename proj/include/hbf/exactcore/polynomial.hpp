#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hbf/exactcore/big_rational.hpp"

namespace hbf {

/// Dense univariate polynomial with exact rational coefficients;
/// coefficient i multiplies variable^i. Trailing zeros are trimmed on
/// construction, so the zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> coefficients, std::string variable = "x");
  RationalPolynomial(std::initializer_list<BigRational> coefficients);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const BigRational> coefficients() const { return coeffs_; }
  const std::string& variable() const { return variable_; }
  void set_variable(std::string name) { variable_ = std::move(name); }

  /// Coefficient of variable^i; zero beyond the degree.
  BigRational coefficient(std::size_t i) const;
  const BigRational& leading_coefficient() const;

  BigRational operator()(const BigRational& x) const { return eval(x); }
  BigRational eval(const BigRational& x) const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const BigRational& s, const RationalPolynomial& p);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// "2 - 1/3*x + 47/19440*x^4" style rendering.
  std::string to_string() const;

 private:
  void trim();

  std::vector<BigRational> coeffs_;
  std::string variable_ = "x";
};

BigRational poly_eval(const RationalPolynomial& p, const BigRational& x);
RationalPolynomial poly_derivative(const RationalPolynomial& p);

/// Euclidean division a = q*b + r with deg r < deg b. Throws DomainError
/// when b is zero.
std::pair<RationalPolynomial, RationalPolynomial> poly_divmod(const RationalPolynomial& a,
                                                              const RationalPolynomial& b);

}  // namespace hbf
