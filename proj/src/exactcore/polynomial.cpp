#include "hbf/exactcore/polynomial.hpp"

#include <algorithm>

#include "hbf/errors.hpp"

namespace hbf {

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coefficients, std::string variable)
    : coeffs_(std::move(coefficients)), variable_(std::move(variable)) {
  trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<BigRational> coefficients)
    : coeffs_(coefficients) {
  trim();
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational RationalPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
}

const BigRational& RationalPolynomial::leading_coefficient() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

BigRational RationalPolynomial::eval(const BigRational& x) const {
  // Horner on the raw gmp type avoids a temporary per step.
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x.raw();
    acc += it->raw();
  }
  return BigRational(std::move(acc));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<BigRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return RationalPolynomial(std::move(c), a.variable_);
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<BigRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
  return RationalPolynomial(std::move(c), a.variable_);
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return RationalPolynomial({}, a.variable_);
  std::vector<mpq_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i].raw() * b.coeffs_[j].raw();
  }
  std::vector<BigRational> out;
  out.reserve(c.size());
  for (auto& q : c) out.emplace_back(std::move(q));
  return RationalPolynomial(std::move(out), a.variable_);
}

RationalPolynomial operator*(const BigRational& s, const RationalPolynomial& p) {
  std::vector<BigRational> c(p.coeffs_);
  for (auto& v : c) v *= s;
  return RationalPolynomial(std::move(c), p.variable_);
}

std::string RationalPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigRational& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string mag = c.abs().is_integer() ? c.abs().numerator().get_str() : c.abs().to_string();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    out += mag;
    if (i >= 1) out += "*" + variable_;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

BigRational poly_eval(const RationalPolynomial& p, const BigRational& x) { return p.eval(x); }

RationalPolynomial poly_derivative(const RationalPolynomial& p) {
  const auto c = p.coefficients();
  if (c.size() <= 1) return RationalPolynomial({}, p.variable());
  std::vector<BigRational> d;
  d.reserve(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * BigRational(static_cast<long>(k)));
  return RationalPolynomial(std::move(d), p.variable());
}

std::pair<RationalPolynomial, RationalPolynomial> poly_divmod(const RationalPolynomial& a,
                                                              const RationalPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const auto bc = b.coefficients();
  std::vector<mpq_class> rem;
  for (const auto& c : a.coefficients()) rem.push_back(c.raw());
  const std::size_t nb = bc.size();
  if (rem.size() < nb) return {RationalPolynomial({}, a.variable()), a};
  std::vector<mpq_class> quot(rem.size() - nb + 1);
  const mpq_class& lead = bc.back().raw();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const mpq_class f = rem[k + nb - 1] / lead;
    quot[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) rem[k + j] -= f * bc[j].raw();
  }
  rem.resize(nb - 1);
  auto wrap = [&](std::vector<mpq_class>& v) {
    std::vector<BigRational> out;
    out.reserve(v.size());
    for (auto& q : v) out.emplace_back(std::move(q));
    return RationalPolynomial(std::move(out), a.variable());
  };
  return {wrap(quot), wrap(rem)};
}

}  // namespace hbf
