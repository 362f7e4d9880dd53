#include "hbf/exactcore/roots.hpp"

#include <functional>

#include "hbf/errors.hpp"

namespace hbf {

namespace {

using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Divides by the positive gcd of the coefficients.
void make_primitive(IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

IntPoly to_integer(const RationalPolynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  }
  IntPoly out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    mpz_class v = c.numerator() * (l / c.denominator());
    out.push_back(std::move(v));
  }
  make_primitive(out);
  return out;
}

RationalPolynomial to_rational(const IntPoly& p) {
  std::vector<BigRational> c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(v);
  return RationalPolynomial(std::move(c));
}

IntPoly derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

/// Returns a positive multiple of rem(a, b).
IntPoly positive_pseudo_remainder(IntPoly a, const IntPoly& b) {
  const mpz_class& lb = b.back();
  const std::size_t nb = b.size();
  bool negated = false;
  while (a.size() >= nb && !a.empty()) {
    const mpz_class la = a.back();
    const std::size_t shift = a.size() - nb;
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j < nb; ++j) a[shift + j] -= la * b[j];
    if (lb < 0) negated = !negated;
    trim(a);
    make_primitive(a);
  }
  if (negated) {
    for (auto& c : a) c = -c;
  }
  return a;
}

int sign_of(const IntPoly& p, const BigRational& x) {
  if (p.empty()) return 0;
  const mpz_class n = x.numerator();
  const mpz_class d = x.denominator();
  mpz_class acc = p.back();
  mpz_class dpow = 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    dpow *= d;
    acc = acc * n + p[i] * dpow;
  }
  return sgn(acc);
}

int count_variations(const std::vector<int>& signs) {
  int v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

BigRational power_of_two_at_least(const BigRational& x) {
  BigRational b(1);
  while (b <= x) b *= BigRational(2);
  return b;
}

}  // namespace

SturmSequence::SturmSequence(const RationalPolynomial& p) {
  if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  chain_.push_back(to_integer(p));
  IntPoly d = derivative(chain_.front());
  if (d.empty()) return;
  make_primitive(d);
  chain_.push_back(std::move(d));
  while (true) {
    IntPoly r = positive_pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain_.push_back(std::move(r));
  }
}

int SturmSequence::sign_at(const BigRational& x) const { return sign_of(chain_.front(), x); }

int SturmSequence::variations_at(const BigRational& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& p : chain_) s.push_back(sign_of(p, x));
  return count_variations(s);
}

int SturmSequence::variations_at_positive_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(sgn(p.back()));
  return count_variations(s);
}

int SturmSequence::variations_at_negative_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_) {
    const int lead = sgn(p.back());
    s.push_back((p.size() - 1) % 2 == 0 ? lead : -lead);
  }
  return count_variations(s);
}

int SturmSequence::count_roots(const BigRational& a, const BigRational& b) const {
  return variations_at(a) - variations_at(b);
}

RationalPolynomial SturmSequence::last() const { return to_rational(chain_.back()); }

PositiveRootIsolator::PositiveRootIsolator(const RationalPolynomial& p)
    : squarefree_(p), sturm_(p) {
  if (sturm_.length() > 1 && sturm_.last().degree() > 0) {
    squarefree_ = poly_divmod(p, sturm_.last()).first;
    sturm_ = SturmSequence(squarefree_);
  }
  // Roots at zero are not positive; strip the x^k factor so 0 is a regular point.
  const auto c = squarefree_.coefficients();
  if (!c.empty() && c.front().is_zero()) {
    std::vector<BigRational> shifted(c.begin() + 1, c.end());
    squarefree_ = RationalPolynomial(std::move(shifted), p.variable());
    sturm_ = SturmSequence(squarefree_);
  }
  const auto sc = squarefree_.coefficients();
  BigRational cauchy(0);
  for (std::size_t i = 0; i + 1 < sc.size(); ++i) {
    const BigRational r = (sc[i] / sc.back()).abs();
    if (r > cauchy) cauchy = r;
  }
  bound_ = power_of_two_at_least(cauchy + BigRational(1));
  positive_count_ = sturm_.count_roots(BigRational(0), bound_);
}

std::vector<RationalInterval> PositiveRootIsolator::isolate() const {
  std::vector<RationalInterval> out;
  if (positive_count_ == 0) return out;

  // Invariant on entry: a and b are not roots and (a, b) holds `count` roots.
  std::function<void(const BigRational&, const BigRational&, int)> split =
      [&](const BigRational& a, const BigRational& b, int count) {
        if (count == 0) return;
        if (count == 1) {
          out.push_back({a, b});
          return;
        }
        const BigRational m = (a + b) / BigRational(2);
        if (sturm_.sign_at(m) != 0) {
          const int left = sturm_.count_roots(a, m);
          split(a, m, left);
          split(m, b, count - left);
          return;
        }
        BigRational delta = (b - a) / BigRational(4);
        while (sturm_.sign_at(m - delta) == 0 || sturm_.sign_at(m + delta) == 0 ||
               sturm_.count_roots(m - delta, m + delta) != 1) {
          delta /= BigRational(2);
        }
        const int left = sturm_.count_roots(a, m - delta);
        split(a, m - delta, left);
        out.push_back({m, m});
        split(m + delta, b, count - left - 1);
      };
  split(BigRational(0), bound_, positive_count_);
  return out;
}

RationalInterval PositiveRootIsolator::refine(RationalInterval iv, const BigRational& max_width) const {
  if (iv.is_point()) return iv;
  int sign_lo = sturm_.sign_at(iv.lo);
  if (sign_lo == 0) return {iv.lo, iv.lo};
  if (sturm_.sign_at(iv.hi) == 0) return {iv.hi, iv.hi};
  while (iv.width() > max_width) {
    const BigRational m = iv.midpoint();
    const int s = sturm_.sign_at(m);
    if (s == 0) return {m, m};
    if (s == sign_lo) {
      iv.lo = m;
    } else {
      iv.hi = m;
    }
  }
  return iv;
}

std::vector<RationalInterval> isolate_positive_roots(const RationalPolynomial& p) {
  return PositiveRootIsolator(p).isolate();
}

}  // namespace hbf
