#pragma once

#include <cstddef>
#include <vector>

#include "hbf/exactcore/big_rational.hpp"
#include "hbf/functions/precision_real.hpp"

namespace hbf::functions {

// Closed forms. Each result satisfies abs_error <= 10^-precision_digits or
// the call throws PrecisionError. Arguments are exact rationals.

/// (1 + 1/x)^(alpha x). x > 0.
PrecisionReal eval_h(const BigRational& alpha, const BigRational& x, const EvalRequest& req = {});
/// log(1 + 1/x) - 1/(x + 1). x > 0.
PrecisionReal eval_rho(const BigRational& x, const EvalRequest& req = {});
/// -rho'/rho = 1 / (x (x+1) [(x+1) log(1+1/x) - 1]). x > 0.
PrecisionReal eval_g(const BigRational& x, const EvalRequest& req = {});
/// Density of g's Stieltjes representation on (0, 1).
PrecisionReal eval_tau0(const BigRational& t, const EvalRequest& req = {});

struct Tau0Minimum {
  PrecisionReal t_star;
  PrecisionReal m;
};
/// Interior minimum of tau0, by bisection on the sign of the derivative of
/// 1/tau0.
Tau0Minimum tau0_min(const EvalRequest& req = {});

/// Ball versions used by the quadrature integrands and by certify.
PrecisionReal tau0(const PrecisionReal& t, const PrecisionReal& one_minus_t);
/// tau0(e^-u) e^-u, stable for u -> 0 and u -> inf.
PrecisionReal tau0_log_weight(const PrecisionReal& u);

/// phi_alpha(s) = e^alpha sum_n (-1)^n p_{n+1}(alpha) s^n / n!, prepared for
/// all |s| <= s_max. The p_n are computed once in floating point with an
/// a priori rounding bound; the tail uses p_n(a) <= C(n+|a|-1, n).
class PhiSeries {
 public:
  PhiSeries(const BigRational& alpha, const BigRational& s_max, int digits, std::size_t max_terms = 20000);

  PrecisionReal value(const PrecisionReal& s) const { return evaluate(s, 1); }
  PrecisionReal derivative(const PrecisionReal& s) const { return evaluate(s, 2); }
  PrecisionReal value(const BigRational& s) const;
  PrecisionReal derivative(const BigRational& s) const;

  mpfr_prec_t precision() const { return bits_; }
  std::size_t terms() const { return p_.size(); }

 private:
  PrecisionReal evaluate(const PrecisionReal& s, std::size_t shift) const;

  int digits_;
  mpfr_prec_t bits_;
  Real abs_alpha_;
  PrecisionReal exp_alpha_;
  std::vector<PrecisionReal> p_;
  std::vector<Real> bound_;  ///< C(n+|a|-1, n), rounded up
};

PrecisionReal eval_phi_series(const BigRational& alpha, const BigRational& s, const EvalRequest& req = {});
/// (1/pi) int_0^1 (x/(1-x))^(alpha x) sin(alpha pi x) e^(-s x) dx, plus e^-s
/// when alpha = 1. 0 < alpha <= 1, s >= 0.
PrecisionReal eval_phi_integral(const BigRational& alpha, const BigRational& s, const EvalRequest& req = {});

/// 2 + sum_{n>=1} (t_n - alpha/(n+1)) x^n / n!. x >= 0.
PrecisionReal eval_G(const BigRational& alpha, const BigRational& x, const EvalRequest& req = {});
/// e^-t + int_0^1 e^(-ts) tau0(s) ds - alpha ((1 - e^-t)/t - e^-t). t > 0.
PrecisionReal eval_F(const BigRational& alpha, const BigRational& t, const EvalRequest& req = {});
/// (2 + sum t_n x^n/n!) / (sum x^n/(n+1)!). x > 0.
PrecisionReal eval_M(const BigRational& x, const EvalRequest& req = {});
/// tau0(1 - e^-s) e^-s. s > 0.
PrecisionReal eval_d(const BigRational& s, const EvalRequest& req = {});

/// int_0^1 s^n tau0(1-s) ds by quadrature.
PrecisionReal moment_oracle(std::size_t n, const EvalRequest& req = {});

/// |h_alpha(x) - 1 - int_0^inf (1 - e^(-sx)) phi_alpha(s) ds| with phi from
/// eval_phi_integral. 0 <= alpha <= 1, x > 0.
PrecisionReal check_bernstein_representation(const BigRational& alpha, const BigRational& x,
                                             const EvalRequest& req = {});
/// |e^alpha - h_alpha(x) - int_0^inf e^(-sx) phi_alpha(s) ds|. 0 <= alpha <= 1, x > 0.
PrecisionReal check_laplace_representation(const BigRational& alpha, const BigRational& x,
                                           const EvalRequest& req = {});

// Integral representations, used as independent oracles.

/// int_0^inf e^(-tx) ((1 - e^-t)/t - e^-t) dt
PrecisionReal rho_laplace_integral(const BigRational& x, const EvalRequest& req = {});
/// int_0^1 t / (x+t)^2 dt
PrecisionReal rho_s2_integral(const BigRational& x, const EvalRequest& req = {});
/// 1/(x+1) + int_0^1 tau0(t) / (x+t) dt
PrecisionReal g_stieltjes_integral(const BigRational& x, const EvalRequest& req = {});
/// e^t F_alpha(t) = 1 + alpha + int_0^1 e^(ts) tau0(1-s) ds - alpha (e^t - 1)/t
PrecisionReal scaled_F_integral(const BigRational& alpha, const BigRational& t, const EvalRequest& req = {});
/// int_0^inf d(s) ds
PrecisionReal d_normalization(const EvalRequest& req = {});

/// Upper bound on B x^(N+1) / ((N+1)! (1 - x/(N+2))) for 0 <= x < N+2;
/// +inf otherwise.
Real exp_series_tail(const Real& x_upper, std::size_t N, const Real& B);

}  // namespace hbf::functions
