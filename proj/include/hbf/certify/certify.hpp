#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hbf/exactcore/big_rational.hpp"
#include "hbf/exactcore/polynomial.hpp"
#include "hbf/functions/precision_real.hpp"

namespace hbf::certify {

/// Evidence that t_n > c/(n+1) for every n >= n_threshold, from
/// t_n > tau0(1-sigma) (1 - sigma^(n+1)) / (n+1).
struct TailCertificate {
  BigRational c;
  BigRational sigma;
  PrecisionReal tau0_value;  ///< tau0(1 - sigma)
  long n_threshold = 0;
  bool valid = false;
};

/// Throws DomainError unless 1/2 < sigma < 1.
TailCertificate tail_threshold(const BigRational& c, const BigRational& sigma, const EvalRequest& req = {});

struct RangeCertificate {
  BigRational c;
  long n_from = 0;
  long n_to = 0;
  std::vector<long> failures;  ///< n with t_n <= c/(n+1)
  bool all_pass = false;
};

/// Exact comparison of t_n against c/(n+1) for n_from <= n <= n_to.
RangeCertificate verify_moment_bound(const BigRational& c, long n_from, long n_to);

/// 2 + sum_{n=1}^{N} (t_n - alpha/(n+1)) x^n / n!.  N >= 1.
RationalPolynomial build_PN(std::size_t N, const BigRational& alpha);

struct PNMinimum {
  PrecisionReal x0;
  PrecisionReal p;
  BigRational x_rational;  ///< the rational point at which p_rational was taken
  BigRational p_rational;  ///< P_N(x_rational), exact
};

/// Global minimum of P_N on [0, inf) from the exact critical points.
/// Throws CertificationError when the leading coefficient is not positive.
PNMinimum minimize_PN(std::size_t N, const BigRational& alpha, const EvalRequest& req = {});

struct PositivityReport {
  std::size_t N = 0;
  BigRational alpha;
  bool positive_on_half_line = false;
  int positive_roots = 0;  ///< distinct roots in (0, inf), by Sturm count
  std::optional<PNMinimum> witness;
};

/// P_N > 0 on [0, inf) iff P_N(0) > 0 and the Sturm count of roots in
/// (0, inf) is zero.
PositivityReport certify_PN_positive(std::size_t N, const BigRational& alpha, const EvalRequest& req = {});

/// x^(N+1) / ((N+1)! (1 - x/(N+2))) >= sum_{n>N} x^n/n!, exact.
/// Throws DomainError unless 0 <= x < N+2.
BigRational remainder_bound(std::size_t N, const BigRational& x);
/// The same bound at the upper end of the ball `x`.
PrecisionReal remainder_upper_bound(std::size_t N, const PrecisionReal& x);

/// G_alpha(x) <= P_N(x) + R_N(x) for alpha >= 0 since t_n <= 1; a negative
/// right-hand side at one rational point proves beta* < alpha.
struct Refutation {
  std::size_t N = 0;
  BigRational alpha;
  BigRational x;
  BigRational pn_value;
  BigRational remainder;
  bool refuted = false;
};

Refutation refutation_certificate(std::size_t N, const BigRational& alpha, const EvalRequest& req = {});
bool refute_alpha(std::size_t N, const BigRational& alpha, const EvalRequest& req = {});

struct BracketOptions {
  bool auto_escalate = true;
  std::size_t escalation_step = 10;
  std::size_t max_N = 200;
};

struct BetaBracket {
  BigRational lower;  ///< certified lower <= beta*
  BigRational upper;  ///< certified beta* < upper
  std::size_t N_used = 0;
  int precision_digits = 0;  ///< requested width exponent
  bool target_met = false;
  bool n_insufficient = false;
  std::size_t steps = 0;
  PositivityReport lower_report;
  Refutation upper_report;
  TailCertificate tail;   ///< t_n > 2.3/(n+1) for large n
  RangeCertificate range; ///< the same for the remaining n >= 5
};

/// Bisection between a P_N positivity certificate and a refutation,
/// starting from [2, 23/10]. Throws DomainError for N < 5 or
/// target_digits < 1 and CertificationError when the seed bracket fails.
BetaBracket bracket_beta_star(std::size_t N, int target_digits, const EvalRequest& req = {},
                              const BracketOptions& options = {});

struct PhiMinimum {
  BigRational s;
  PrecisionReal value;
};

/// Smallest value of phi_alpha over a grid of (0, s_max] refined at each
/// local minimum by bisection on phi'. Stops at the first certainly
/// negative value. Not a certificate.
PhiMinimum phi_minimum(const BigRational& alpha, const BigRational& s_max, int digits);

struct AlphaStarEstimate {
  PrecisionReal value;
  BigRational lower;  ///< min phi observed positive
  BigRational upper;  ///< min phi observed negative
  BigRational witness_s;
  PrecisionReal witness_value;
  std::size_t steps = 0;
  bool certified = false;
};

/// Bisection on [9/4, 47/20] of the sign of min phi_alpha on (0, s_max].
/// Throws PrecisionError when a sign cannot be resolved.
AlphaStarEstimate estimate_alpha_star(const EvalRequest& req = {}, const BigRational& s_max = BigRational(200));

struct HausdorffReport {
  std::size_t K = 0;
  BigRational min_value;
  std::size_t min_n = 0;
  std::size_t min_k = 0;
  std::size_t negative_count = 0;
  bool all_nonneg = true;
};

/// All (-1)^k Delta^k mu_n with n + k <= K. Throws DomainError when seq has
/// fewer than K+1 entries.
HausdorffReport hausdorff_check(std::span<const BigRational> seq, std::size_t K);

}  // namespace hbf::certify
