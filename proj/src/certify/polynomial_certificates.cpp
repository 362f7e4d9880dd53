#include <string>

#include "hbf/certify/certify.hpp"
#include "hbf/errors.hpp"
#include "hbf/exactcore/roots.hpp"
#include "hbf/moments/moments.hpp"

namespace hbf::certify {

namespace {

/// Upper bound of |P''| on [0, b].
BigRational second_derivative_bound(const RationalPolynomial& p, const BigRational& b) {
  BigRational total(0);
  BigRational power(1);  // b^(k-2)
  for (std::size_t k = 2; k <= static_cast<std::size_t>(std::max(p.degree(), 1)); ++k) {
    total += p.coefficient(k).abs() * BigRational(static_cast<long>(k * (k - 1))) * power;
    power *= b;
  }
  return total;
}

}  // namespace

RationalPolynomial build_PN(std::size_t N, const BigRational& alpha) {
  if (N < 1) throw DomainError("N must be at least 1");
  std::vector<BigRational> c{BigRational(2)};
  for (std::size_t n = 1; n <= N; ++n) c.push_back(moments::G_coefficient(n, alpha));
  return RationalPolynomial(std::move(c), "x");
}

PNMinimum minimize_PN(std::size_t N, const BigRational& alpha, const EvalRequest& req) {
  req.validate();
  const RationalPolynomial P = build_PN(N, alpha);
  if (P.leading_coefficient().sign() <= 0) {
    throw CertificationError("P_N has a nonpositive leading coefficient and is unbounded below");
  }
  const mpfr_prec_t bits = req.working_bits();
  const BigRational width = BigRational(1, 10).pow(req.precision_digits);

  BigRational best_x(0);
  BigRational best_value = P(best_x);
  BigRational best_radius(0);
  const RationalPolynomial dP = poly_derivative(P);
  if (!dP.is_zero() && dP.degree() >= 1) {
    const PositiveRootIsolator isolator(dP);
    for (RationalInterval interval : isolator.isolate()) {
      interval = isolator.refine(interval, width);
      const BigRational x = interval.midpoint();
      const BigRational value = P(x);
      if (value < best_value) {
        best_x = x;
        best_value = value;
        best_radius = interval.width() / BigRational(2);
        // P(x) - P(x*) = P''(xi) (x - x*)^2 / 2 with P'(x*) = 0
      }
    }
  }
  PNMinimum out;
  out.x_rational = best_x;
  out.p_rational = best_value;
  out.x0 = PrecisionReal::from_rational(best_x, bits);
  out.x0.widen(Real(best_radius, 64, MPFR_RNDU));
  out.p = PrecisionReal::from_rational(best_value, bits);
  if (!best_radius.is_zero()) {
    const BigRational curvature = second_derivative_bound(P, best_x + best_radius);
    out.p.widen(Real(curvature * best_radius * best_radius / BigRational(2), 64, MPFR_RNDU));
  }
  out.x0.working_digits = out.p.working_digits = req.precision_digits;
  return out;
}

PositivityReport certify_PN_positive(std::size_t N, const BigRational& alpha, const EvalRequest& req) {
  const RationalPolynomial P = build_PN(N, alpha);
  PositivityReport report;
  report.N = N;
  report.alpha = alpha;
  const PositiveRootIsolator isolator(P);
  report.positive_roots = isolator.count();
  report.positive_on_half_line = P(BigRational(0)).sign() > 0 && report.positive_roots == 0;
  if (!report.positive_on_half_line && P.leading_coefficient().sign() > 0) {
    report.witness = minimize_PN(N, alpha, req);
  }
  return report;
}

BigRational remainder_bound(std::size_t N, const BigRational& x) {
  const BigRational limit(static_cast<long>(N + 2));
  if (x.sign() < 0 || x >= limit) {
    throw DomainError("the remainder bound needs 0 <= x < N+2, got x = " + x.to_string());
  }
  const BigRational head = x.pow(static_cast<long>(N + 1)) / BigRational(factorial(N + 1));
  return head / (BigRational(1) - x / limit);
}

PrecisionReal remainder_upper_bound(std::size_t N, const PrecisionReal& x) {
  if (x.value.sign() < 0) throw DomainError("the remainder bound needs x >= 0");
  const BigRational top = x.upper().to_rational();
  const BigRational bound = remainder_bound(N, top.sign() < 0 ? BigRational(0) : top);
  PrecisionReal out = PrecisionReal::from_rational(bound, x.precision());
  out.working_digits = x.working_digits;
  return out;
}

Refutation refutation_certificate(std::size_t N, const BigRational& alpha, const EvalRequest& req) {
  Refutation r;
  r.N = N;
  r.alpha = alpha;
  // the bound G <= P_N + R_N uses t_n - alpha/(n+1) <= 1
  if (alpha.sign() < 0) return r;
  const RationalPolynomial P = build_PN(N, alpha);
  if (P.leading_coefficient().sign() <= 0) return r;
  const PNMinimum m = minimize_PN(N, alpha, req);
  r.x = m.x_rational;
  r.pn_value = m.p_rational;
  if (r.pn_value.sign() >= 0 || r.x >= BigRational(static_cast<long>(N + 2))) return r;
  r.remainder = remainder_bound(N, r.x);
  r.refuted = (r.pn_value + r.remainder).sign() < 0;
  return r;
}

bool refute_alpha(std::size_t N, const BigRational& alpha, const EvalRequest& req) {
  return refutation_certificate(N, alpha, req).refuted;
}

BetaBracket bracket_beta_star(std::size_t N, int target_digits, const EvalRequest& req,
                              const BracketOptions& options) {
  if (N < 5) throw DomainError("bracket_beta_star needs N >= 5");
  if (target_digits < 1) throw DomainError("target_digits must be at least 1");
  req.validate();
  const BigRational ceiling(23, 10);

  BetaBracket out;
  out.precision_digits = target_digits;
  // every coefficient of G beyond x^4 is positive for alpha <= 2.3, so
  // P_N > 0 implies G >= 0 for N >= 4
  out.tail = tail_threshold(ceiling, BigRational(989, 1000), req);
  if (!out.tail.valid) throw CertificationError("tail certificate for c = 23/10 failed");
  out.range = verify_moment_bound(ceiling, 5, std::max<long>(5, out.tail.n_threshold - 1));
  if (!out.range.all_pass) throw CertificationError("range certificate for c = 23/10 failed");

  BigRational lo(2);
  BigRational hi = ceiling;
  if (!certify_PN_positive(N, lo, req).positive_on_half_line) {
    throw CertificationError("P_N(x, 2) is not positive at N = " + std::to_string(N));
  }
  if (!refute_alpha(N, hi, req)) {
    throw CertificationError("alpha = 23/10 is not refuted at N = " + std::to_string(N));
  }
  const BigRational width = BigRational(1, 10).pow(target_digits);
  while (hi - lo > width) {
    const BigRational mid = (lo + hi) / BigRational(2);
    ++out.steps;
    if (certify_PN_positive(N, mid, req).positive_on_half_line) {
      lo = mid;
    } else if (refute_alpha(N, mid, req)) {
      hi = mid;
    } else if (options.auto_escalate && N + options.escalation_step <= options.max_N) {
      N += options.escalation_step;
    } else {
      out.n_insufficient = true;
      break;
    }
  }
  out.lower = lo;
  out.upper = hi;
  out.N_used = N;
  out.target_met = hi - lo <= width;
  out.lower_report = certify_PN_positive(N, lo, req);
  out.upper_report = refutation_certificate(N, hi, req);
  if (!out.lower_report.positive_on_half_line || !out.upper_report.refuted) {
    throw CertificationError("bracket endpoints failed re-verification at N = " + std::to_string(N));
  }
  return out;
}

}  // namespace hbf::certify
