#pragma once

#include <memory>
#include <span>
#include <vector>

#include "hbf/exactcore/big_rational.hpp"
#include "hbf/exactcore/polynomial.hpp"

namespace hbf::moments {

/// Exact sequences indexed 0..n_max:
///   rho  coefficients of 1 / sum_n (-1)^n 2 u^n / ((n+1)(n+2))
///   s    moments of tau0(t) dt on (0,1)
///   t    moments of tau0(1-t) dt on (0,1)
///   a    increments with t_n = 1 / (a_0 + ... + a_n)
struct MomentTable {
  std::size_t n_max = 0;
  std::vector<BigRational> rho;
  std::vector<BigRational> s;
  std::vector<BigRational> t;
  std::vector<BigRational> a;
};

std::vector<BigRational> rho_coeffs(std::size_t n_max);
std::vector<BigRational> s_moments(std::size_t n_max);
std::vector<BigRational> t_moments(std::size_t n_max);
std::vector<BigRational> a_sequence(std::size_t n_max);

/// result[n] = sum_k (-1)^k C(n,k) seq[k]. An involution.
std::vector<BigRational> binomial_transform(std::span<const BigRational> seq);

MomentTable build_moment_table(std::size_t n_max);

/// Process-wide memoized table holding at least indices 0..n_max. Grows
/// by extending the recursions; safe to call from several threads.
std::shared_ptr<const MomentTable> moment_table(std::size_t n_max);

/// p_0 .. p_{n_max} as polynomials in alpha, from
/// p_{n+1} = alpha/(n+1) * sum_{k=0}^{n} (k+1)/(k+2) p_{n-k}.
std::vector<RationalPolynomial> p_polynomials(std::size_t n_max);

/// Coefficient of x^n in G_alpha: (t_n - alpha/(n+1)) / n!.  n >= 1.
BigRational G_coefficient(std::size_t n, const BigRational& alpha);

}  // namespace hbf::moments
