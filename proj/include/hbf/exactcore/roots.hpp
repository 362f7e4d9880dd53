#pragma once

#include <vector>

#include <gmpxx.h>

#include "hbf/exactcore/big_rational.hpp"
#include "hbf/exactcore/polynomial.hpp"

namespace hbf {

/// Closed interval [lo, hi] with rational endpoints. A degenerate interval
/// (lo == hi) marks a root hit exactly.
struct RationalInterval {
  BigRational lo;
  BigRational hi;

  bool is_point() const { return lo == hi; }
  BigRational width() const { return hi - lo; }
  BigRational midpoint() const { return (lo + hi) / BigRational(2); }
  bool contains(const BigRational& x) const { return lo <= x && x <= hi; }
};

/// Sturm sequence p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i), stored as
/// primitive integer polynomials (positive rescaling keeps every sign).
class SturmSequence {
 public:
  /// Throws DomainError for the zero polynomial.
  explicit SturmSequence(const RationalPolynomial& p);

  int variations_at(const BigRational& x) const;
  int variations_at_positive_infinity() const;
  int variations_at_negative_infinity() const;

  /// Number of distinct real roots in (a, b]; a and b must not be roots of p.
  int count_roots(const BigRational& a, const BigRational& b) const;

  /// Sign of p(x), computed on the integer form.
  int sign_at(const BigRational& x) const;

  std::size_t length() const { return chain_.size(); }
  /// Last element of the chain: gcd(p, p') up to a constant factor.
  RationalPolynomial last() const;

 private:
  std::vector<std::vector<mpz_class>> chain_;
};

/// Exact real-root isolation on (0, inf) by Sturm bisection over the
/// square-free part. Every root is simple in that part, so endpoint values
/// of each non-degenerate interval have opposite signs.
class PositiveRootIsolator {
 public:
  /// Throws DomainError for the zero polynomial.
  explicit PositiveRootIsolator(const RationalPolynomial& p);

  /// Disjoint isolating intervals in ascending order; empty when p has no
  /// positive real root.
  std::vector<RationalInterval> isolate() const;

  /// Number of distinct roots in (0, inf).
  int count() const { return positive_count_; }

  /// Bisects an isolating interval until its width is at most `max_width`.
  RationalInterval refine(RationalInterval interval, const BigRational& max_width) const;

  const RationalPolynomial& squarefree_part() const { return squarefree_; }

  /// Power of two strictly above every positive root.
  const BigRational& root_bound() const { return bound_; }

 private:
  RationalPolynomial squarefree_;
  SturmSequence sturm_;
  BigRational bound_;
  int positive_count_ = 0;
};

std::vector<RationalInterval> isolate_positive_roots(const RationalPolynomial& p);

}  // namespace hbf
