#include "hbf/functions/functions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hbf/errors.hpp"
#include "hbf/functions/quadrature.hpp"
#include "hbf/moments/moments.hpp"

namespace hbf::functions {

namespace {

constexpr int kAttempts = 4;
constexpr double kLog10E = 0.43429448190325182765;

PrecisionReal ball(const BigRational& q, mpfr_prec_t bits) { return PrecisionReal::from_rational(q, bits); }

Real up64(const Real& x) { return x.with_precision(64, MPFR_RNDU); }

Real infinity() {
  Real r(64L);
  mpfr_set_inf(r.get(), 1);
  return r;
}

void require_positive(const BigRational& v, const std::string& what) {
  if (v.sign() <= 0) throw DomainError(what + " must be positive, got " + v.to_string());
}

void require_nonnegative(const BigRational& v, const std::string& what) {
  if (v.sign() < 0) throw DomainError(what + " must be nonnegative, got " + v.to_string());
}

void require_bernstein_alpha(const BigRational& alpha) {
  if (alpha.sign() < 0 || alpha > BigRational(1)) {
    throw DomainError("alpha must lie in [0, 1], got " + alpha.to_string());
  }
}

/// Evaluates `fn(bits)` at increasing precision until the error meets the
/// request.
template <class Fn>
PrecisionReal refine(const EvalRequest& req, Fn&& fn) {
  req.validate();
  int extra = 0;
  std::string last_problem = "error bound too large";
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    try {
      PrecisionReal r = fn(req.working_bits(extra));
      if (r.meets(req.precision_digits)) {
        r.working_digits = req.precision_digits + 15 + extra;
        return r;
      }
    } catch (const PrecisionError& e) {
      last_problem = e.what();
    }
    extra = 2 * extra + 20;
  }
  throw PrecisionError("cannot reach 10^-" + std::to_string(req.precision_digits) + ": " + last_problem);
}

quadrature::Options quad_options(const EvalRequest& req, int extra = 2) {
  req.validate();
  quadrature::Options o;
  o.digits = req.precision_digits + extra;
  if (req.quadrature_level) o.max_level = *req.quadrature_level;
  return o;
}

PrecisionReal converged(const quadrature::Result& r, const std::string& what) {
  if (!r.converged) {
    throw PrecisionError(what + ": quadrature did not settle after " + std::to_string(r.levels) + " levels");
  }
  return r.estimate;
}

PrecisionReal checked(PrecisionReal r, const EvalRequest& req, const std::string& what) {
  if (!r.meets(req.precision_digits)) {
    throw PrecisionError(what + ": error " + r.error_string() + " exceeds 10^-" +
                         std::to_string(req.precision_digits));
  }
  r.working_digits = req.precision_digits + 15;
  return r;
}

PrecisionReal power(PrecisionReal base, std::size_t n) {
  PrecisionReal r = PrecisionReal::exact(1L, base.precision());
  while (n > 0) {
    if (n & 1U) r = r * base;
    n >>= 1U;
    if (n > 0) base = square(base);
  }
  return r;
}

/// Horner evaluation of sum c_n x^n in ball arithmetic.
PrecisionReal horner(const std::vector<BigRational>& c, const PrecisionReal& x, mpfr_prec_t bits) {
  PrecisionReal acc = PrecisionReal::exact(0L, bits);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + ball(*it, bits);
  return acc;
}

struct Truncation {
  std::size_t N;
  Real tail;
};

/// Least N (from `start`, in steps of 10) whose tail bound is below `tol`.
template <class BoundFn>
Truncation truncate(const Real& x_up, std::size_t start, const Real& tol, BoundFn&& B) {
  for (std::size_t N = start; N < 100000; N += 10) {
    Real tail = exp_series_tail(x_up, N, B(N));
    if (tail <= tol) return {N, tail};
  }
  throw PrecisionError("series truncation exceeds 100000 terms");
}

int growth_digits(const BigRational& x) { return static_cast<int>(std::ceil(x.to_double() * kLog10E)) + 5; }

PrecisionReal pi_times(const PrecisionReal& v) { return pi_ball(v.precision()) * v; }

}  // namespace

Real exp_series_tail(const Real& x_upper, std::size_t N, const Real& B) {
  Real bound = up64(B);
  for (std::size_t k = 1; k <= N + 1; ++k) {
    bound = mul_up(bound, x_upper);
    bound = div_up(bound, Real(static_cast<long>(k), 64));
  }
  if (bound.is_zero()) return bound;
  Real ratio = div_up(x_upper, Real(static_cast<long>(N + 2), 64));
  Real denom(64L);
  mpfr_ui_sub(denom.get(), 1, ratio.get(), MPFR_RNDD);
  if (!(denom > 0L)) return infinity();
  return div_up(bound, denom);
}

PrecisionReal eval_h(const BigRational& alpha, const BigRational& x, const EvalRequest& req) {
  require_positive(x, "x");
  return refine(req, [&](mpfr_prec_t bits) {
    const PrecisionReal X = ball(x, bits);
    return exp(ball(alpha, bits) * X * log1p(1L / X));
  });
}

PrecisionReal eval_rho(const BigRational& x, const EvalRequest& req) {
  require_positive(x, "x");
  return refine(req, [&](mpfr_prec_t bits) {
    const PrecisionReal X = ball(x, bits);
    return log1p(1L / X) - 1L / (X + 1L);
  });
}

PrecisionReal eval_g(const BigRational& x, const EvalRequest& req) {
  require_positive(x, "x");
  return refine(req, [&](mpfr_prec_t bits) {
    const PrecisionReal X = ball(x, bits);
    const PrecisionReal X1 = X + 1L;
    return 1L / (X * X1 * (X1 * log1p(1L / X) - 1L));
  });
}

PrecisionReal tau0(const PrecisionReal& t, const PrecisionReal& one_minus_t) {
  const PrecisionReal l = log(one_minus_t) - log(t);
  const PrecisionReal a = one_minus_t * l - 1L;
  const PrecisionReal pi = pi_ball(std::max(t.precision(), one_minus_t.precision()));
  return 1L / (t * square(a) + square(pi) * t * square(one_minus_t));
}

PrecisionReal tau0_log_weight(const PrecisionReal& u) {
  const PrecisionReal c = -expm1(-u);
  const PrecisionReal a = c * (log(c) + u) - 1L;
  return 1L / (square(a) + square(pi_times(c)));
}

PrecisionReal eval_tau0(const BigRational& t, const EvalRequest& req) {
  if (t.sign() <= 0 || t >= BigRational(1)) throw DomainError("t must lie in (0, 1), got " + t.to_string());
  return refine(req, [&](mpfr_prec_t bits) { return tau0(ball(t, bits), ball(BigRational(1) - t, bits)); });
}

Tau0Minimum tau0_min(const EvalRequest& req) {
  req.validate();
  const mpfr_prec_t bits = req.working_bits(5);
  // Sign of d/dt [1/tau0]; positive left of t*.
  auto slope = [&](const BigRational& t) {
    const PrecisionReal T = ball(t, bits);
    const PrecisionReal U = ball(BigRational(1) - t, bits);
    const PrecisionReal l = log(U) - log(T);
    const PrecisionReal a = U * l - 1L;
    const PrecisionReal pi = pi_ball(bits);
    return square(a) + T * a * (-l - 1L / T) * 2L + square(pi) * U * (1L - T * 3L);
  };
  BigRational lo(1, 2);
  BigRational hi(7, 10);
  if (!slope(lo).certainly_positive() || !slope(hi).certainly_negative()) {
    throw PrecisionError("tau0 minimum not bracketed");
  }
  const BigRational width = BigRational(1, 10).pow(req.precision_digits + 1);
  while (hi - lo > width) {
    const BigRational mid = (lo + hi) / BigRational(2);
    const PrecisionReal d = slope(mid);
    if (d.certainly_positive()) {
      lo = mid;
    } else if (d.certainly_negative()) {
      hi = mid;
    } else {
      break;
    }
  }
  const BigRational mid = (lo + hi) / BigRational(2);
  Tau0Minimum out;
  out.t_star = ball(mid, bits);
  out.t_star.widen(Real((hi - lo) / BigRational(2), 64, MPFR_RNDU));
  auto tau = [&](const BigRational& t) { return tau0(ball(t, bits), ball(BigRational(1) - t, bits)); };
  out.m = tau(mid);
  out.m.widen(abs(tau(lo) - out.m).upper());
  out.m.widen(abs(tau(hi) - out.m).upper());
  out.t_star.working_digits = out.m.working_digits = req.precision_digits;
  return out;
}

PhiSeries::PhiSeries(const BigRational& alpha, const BigRational& s_max, int digits, std::size_t max_terms)
    : digits_(digits) {
  if (digits < 1) throw DomainError("digits must be at least 1");
  const Real a_up(alpha.abs(), 64, MPFR_RNDU);
  abs_alpha_ = a_up;
  const Real s_up(s_max.abs(), 64, MPFR_RNDU);
  const Real tol = tolerance(digits);
  const Real ea_up = exp(Real(alpha, 64, MPFR_RNDU)).with_precision(64, MPFR_RNDU) * Real(2L, 64);

  // Bounds b_n = C(n+|a|-1, n) and the number of terms needed at s_max for
  // both the value (shift 1) and the derivative (shift 2).
  bound_.push_back(Real(1L, 64));
  auto extend_bounds = [&](std::size_t n) {
    while (bound_.size() <= n) {
      const long m = static_cast<long>(bound_.size());
      Real factor = div_up(add_up(Real(m - 1, 64), a_up), Real(m, 64));
      bound_.push_back(mul_up(bound_.back(), factor));
    }
  };
  std::size_t needed = 1;
  Real term = Real(1L, 64);  // s^n / n!
  for (std::size_t n = 0;; ++n) {
    if (n + 3 > max_terms) throw PrecisionError("phi series needs more than " + std::to_string(max_terms) + " terms");
    extend_bounds(n + 3);
    // first omitted term for shift 2 and ratio bound from there on
    Real first = mul_up(bound_[n + 2], term);
    Real growth = div_up(add_up(Real(static_cast<long>(n + 2), 64), a_up), Real(static_cast<long>(n + 3), 64));
    if (growth < 1L) growth = Real(1L, 64);
    Real q = div_up(mul_up(growth, s_up), Real(static_cast<long>(n + 1), 64));
    if (q < Real(1L, 64) / 2L && mul_up(mul_up(first, ea_up), Real(2L, 64)) <= tol / 8L) {
      needed = n + 3;
      break;
    }
    term = div_up(mul_up(term, s_up), Real(static_cast<long>(n + 1), 64));
  }

  const double guard = s_max.abs().to_double() * kLog10E + alpha.abs().to_double() * std::log10(needed + 2.0) + 10;
  bits_ = bits_for_digits(digits + static_cast<int>(std::ceil(guard)) + 15);
  exp_alpha_ = exp(ball(alpha, bits_));

  // p_n by the recursion, in floating point.
  std::vector<Real> weight(needed);
  for (std::size_t k = 0; k < needed; ++k) {
    weight[k] = Real(BigRational(static_cast<long>(k + 1), static_cast<long>(k + 2)), bits_);
  }
  auto recurse = [&](const Real& a) {
    std::vector<Real> p(needed, Real(bits_));
    mpfr_set_ui(p[0].get(), 1, MPFR_RNDN);
    Real acc(bits_);
    for (std::size_t n = 0; n + 1 < needed; ++n) {
      mpfr_set_zero(acc.get(), 1);
      for (std::size_t k = 0; k <= n; ++k) mpfr_fma(acc.get(), weight[k].get(), p[n - k].get(), acc.get(), MPFR_RNDN);
      mpfr_mul(p[n + 1].get(), acc.get(), a.get(), MPFR_RNDN);
      mpfr_div_ui(p[n + 1].get(), p[n + 1].get(), n + 1, MPFR_RNDN);
    }
    return p;
  };
  const std::vector<Real> p = recurse(Real(alpha, bits_));
  const std::vector<Real> magnitude = alpha.sign() >= 0 ? p : recurse(Real(alpha.abs(), bits_));

  // Relative rounding of p_n(|a|) is at most ((n+4)^2 + 3n + 10) 2^-bits,
  // counting the rounding of alpha itself; doubled for slack.
  p_.reserve(needed);
  for (std::size_t n = 0; n < needed; ++n) {
    const long nn = static_cast<long>(n);
    Real rel(64L);
    mpfr_set_si_2exp(rel.get(), (nn + 4) * (nn + 4) + 3 * nn + 10, 1 - static_cast<long>(bits_), MPFR_RNDU);
    PrecisionReal entry = PrecisionReal::exact(p[n]);
    entry.widen(mul_up(rel, up64(abs(magnitude[n]))));
    p_.push_back(std::move(entry));
  }
}

PrecisionReal PhiSeries::value(const BigRational& s) const { return value(ball(s, bits_)); }
PrecisionReal PhiSeries::derivative(const BigRational& s) const { return derivative(ball(s, bits_)); }

PrecisionReal PhiSeries::evaluate(const PrecisionReal& s, std::size_t shift) const {
  const Real s_up = up64(abs(s).upper());
  const Real tol = tolerance(digits_);
  const Real ea_up = up64(exp_alpha_.upper());

  // Number of summed terms K and the tail bound for n >= K.
  std::size_t K = 0;
  Real tail = infinity();
  Real term(1L, 64);  // s^K / K!
  for (;; ++K) {
    if (K + shift >= p_.size()) throw PrecisionError("argument beyond the prepared range of the phi series");
    Real first = mul_up(bound_[K + shift], term);
    Real growth = div_up(add_up(Real(static_cast<long>(K + shift), 64), abs_alpha_),
                         Real(static_cast<long>(K + shift + 1), 64));
    if (growth < 1L) growth = Real(1L, 64);
    Real q = div_up(mul_up(growth, s_up), Real(static_cast<long>(K + 1), 64));
    if (q < 1L) {
      Real denom(64L);
      mpfr_ui_sub(denom.get(), 1, q.get(), MPFR_RNDD);
      tail = mul_up(div_up(first, denom), ea_up);
      if (tail <= tol / 4L) break;
    }
    term = div_up(mul_up(term, s_up), Real(static_cast<long>(K + 1), 64));
  }

  PrecisionReal sum = PrecisionReal::exact(0L, bits_);
  PrecisionReal power = PrecisionReal::exact(1L, bits_);  // s^n / n!
  for (std::size_t n = 0; n < K; ++n) {
    const PrecisionReal contribution = p_[n + shift] * power;
    sum = (n % 2 == 0) ? sum + contribution : sum - contribution;
    power = power * s / static_cast<long>(n + 1);
  }
  PrecisionReal out = exp_alpha_ * sum;
  if (shift % 2 == 0) out = -out;
  out.widen(tail);
  out.working_digits = digits_;
  return out;
}

PrecisionReal eval_phi_series(const BigRational& alpha, const BigRational& s, const EvalRequest& req) {
  req.validate();
  const PhiSeries series(alpha, s.abs(), req.precision_digits + 1, req.max_terms.value_or(20000));
  return checked(series.value(s), req, "phi series");
}

PrecisionReal eval_phi_integral(const BigRational& alpha, const BigRational& s, const EvalRequest& req) {
  if (alpha.sign() <= 0 || alpha > BigRational(1)) {
    throw DomainError("the integral formula needs 0 < alpha <= 1, got " + alpha.to_string());
  }
  require_nonnegative(s, "s");
  const bool unit = alpha == BigRational(1);
  const quadrature::Options opts = quad_options(req);
  const mpfr_prec_t bits = bits_for_digits(opts.digits + 15);
  const PrecisionReal A = ball(alpha, bits);
  const PrecisionReal S = ball(s, bits);
  quadrature::FiniteIntegrand f = [&](const Real& x, const Real& from_a, const Real& to_b) {
    const PrecisionReal X = PrecisionReal::exact(x);
    const PrecisionReal base = exp(A * X * (log(PrecisionReal::exact(from_a)) - log(PrecisionReal::exact(to_b))));
    // sin(pi x) = sin(pi (1 - x)) keeps full accuracy next to x = 1
    const PrecisionReal angle = unit ? pi_times(PrecisionReal::exact(to_b)) : pi_times(A * X);
    return base * sin(angle) * exp(-(S * X));
  };
  PrecisionReal r = converged(quadrature::tanh_sinh(f, Real(0L, bits), Real(1L, bits), opts), "phi integral");
  r = r / pi_ball(bits);
  if (unit) r = r + exp(-S);
  return checked(r, req, "phi integral");
}

PrecisionReal eval_G(const BigRational& alpha, const BigRational& x, const EvalRequest& req) {
  require_nonnegative(x, "x");
  return refine(req, [&](mpfr_prec_t bits0) {
    const mpfr_prec_t bits = bits0 + bits_for_digits(growth_digits(x));
    const PrecisionReal X = ball(x, bits);
    // |t_n - alpha/(n+1)| <= B for n > N since 0 < t_n <= 1
    auto B = [&](std::size_t N) {
      const Real shifted(alpha.abs() / BigRational(static_cast<long>(N + 2)), 64, MPFR_RNDU);
      return alpha.sign() >= 0 ? max(Real(1L, 64), shifted) : add_up(Real(1L, 64), shifted);
    };
    const std::size_t start = std::max<std::size_t>(10, static_cast<std::size_t>(x.ceil().get_ui()) + 2);
    const auto [N, tail] = truncate(up64(X.upper()), start, tolerance(req.precision_digits) / 4L, B);
    std::vector<BigRational> c{BigRational(2)};
    for (std::size_t n = 1; n <= N; ++n) c.push_back(moments::G_coefficient(n, alpha));
    PrecisionReal r = horner(c, X, bits);
    r.widen(tail);
    return r;
  });
}

PrecisionReal eval_M(const BigRational& x, const EvalRequest& req) {
  require_positive(x, "x");
  return refine(req, [&](mpfr_prec_t bits0) {
    const mpfr_prec_t bits = bits0 + bits_for_digits(growth_digits(x) + 5);
    const PrecisionReal X = ball(x, bits);
    const Real x_up = up64(X.upper());
    // the denominator is about x/2 for small x, so its tail must scale with x^2;
    // both tails have coefficients below 1/n!
    const Real x_small = x < BigRational(1) ? Real(x, 64, MPFR_RNDD) : Real(1L, 64);
    const Real tol = tolerance(req.precision_digits + 3) * x_small * x_small / 8L;
    const std::size_t start = std::max<std::size_t>(10, static_cast<std::size_t>(x.ceil().get_ui()) + 2);
    const auto [N, tail] = truncate(x_up, start, tol, [](std::size_t) { return Real(1L, 64); });
    const auto table = moments::moment_table(N);
    std::vector<BigRational> top{BigRational(2)};
    std::vector<BigRational> bottom{BigRational(0)};
    BigRational inv_factorial(1);
    for (std::size_t n = 1; n <= N; ++n) {
      inv_factorial /= BigRational(static_cast<long>(n));
      top.push_back(table->t[n] * inv_factorial);
      bottom.push_back(inv_factorial / BigRational(static_cast<long>(n + 1)));
    }
    PrecisionReal num = horner(top, X, bits);
    PrecisionReal den = horner(bottom, X, bits);
    num.widen(tail);
    den.widen(tail);
    return num / den;
  });
}

PrecisionReal eval_d(const BigRational& s, const EvalRequest& req) {
  require_positive(s, "s");
  return refine(req, [&](mpfr_prec_t bits) {
    const PrecisionReal S = ball(s, bits);
    const PrecisionReal e = exp(-S);
    const PrecisionReal c = -expm1(-S);
    // tau0 at t = c, 1 - t = e
    return e * tau0(c, e);
  });
}

PrecisionReal eval_F(const BigRational& alpha, const BigRational& t, const EvalRequest& req) {
  require_positive(t, "t");
  const quadrature::Options opts = quad_options(req);
  const mpfr_prec_t bits = bits_for_digits(opts.digits + 15);
  const PrecisionReal T = ball(t, bits);
  quadrature::HalfLineIntegrand f = [&](const Real& u) {
    const PrecisionReal U = PrecisionReal::exact(u);
    return exp(-(T * exp(-U))) * tau0_log_weight(U);
  };
  const PrecisionReal integral = converged(quadrature::exp_sinh(f, opts), "F integral");
  const PrecisionReal et = exp(-T);
  const PrecisionReal r = et + integral - ball(alpha, bits) * (-expm1(-T) / T - et);
  return checked(r, req, "F");
}

PrecisionReal scaled_F_integral(const BigRational& alpha, const BigRational& t, const EvalRequest& req) {
  require_positive(t, "t");
  const quadrature::Options opts = quad_options(req, 2 + growth_digits(t));
  const mpfr_prec_t bits = bits_for_digits(opts.digits + 15);
  const PrecisionReal T = ball(t, bits);
  quadrature::HalfLineIntegrand f = [&](const Real& u) {
    const PrecisionReal U = PrecisionReal::exact(u);
    return exp(T * -expm1(-U)) * tau0_log_weight(U);
  };
  const PrecisionReal integral = converged(quadrature::exp_sinh(f, opts), "scaled F integral");
  const PrecisionReal A = ball(alpha, bits);
  const PrecisionReal r = A + 1L + integral - A * expm1(T) / T;
  return checked(r, req, "scaled F");
}

PrecisionReal moment_oracle(std::size_t n, const EvalRequest& req) {
  const quadrature::Options opts = quad_options(req);
  quadrature::HalfLineIntegrand f = [&](const Real& u) {
    const PrecisionReal U = PrecisionReal::exact(u);
    return power(-expm1(-U), n) * tau0_log_weight(U);
  };
  return checked(converged(quadrature::exp_sinh(f, opts), "moment"), req, "moment");
}

PrecisionReal rho_laplace_integral(const BigRational& x, const EvalRequest& req) {
  require_positive(x, "x");
  const quadrature::Options opts = quad_options(req);
  const mpfr_prec_t bits = bits_for_digits(opts.digits + 15);
  const PrecisionReal X = ball(x, bits);
  quadrature::HalfLineIntegrand f = [&](const Real& t) {
    const PrecisionReal T = PrecisionReal::exact(t);
    return exp(-(T * X)) * (-expm1(-T) / T - exp(-T));
  };
  return checked(converged(quadrature::exp_sinh(f, opts), "rho Laplace"), req, "rho Laplace");
}

PrecisionReal rho_s2_integral(const BigRational& x, const EvalRequest& req) {
  require_positive(x, "x");
  const quadrature::Options opts = quad_options(req);
  const mpfr_prec_t bits = bits_for_digits(opts.digits + 15);
  const PrecisionReal X = ball(x, bits);
  quadrature::FiniteIntegrand f = [&](const Real& t, const Real&, const Real&) {
    const PrecisionReal T = PrecisionReal::exact(t);
    return T / square(X + T);
  };
  return checked(converged(quadrature::tanh_sinh(f, Real(0L, bits), Real(1L, bits), opts), "rho S2"), req,
                 "rho S2");
}

PrecisionReal g_stieltjes_integral(const BigRational& x, const EvalRequest& req) {
  require_positive(x, "x");
  const quadrature::Options opts = quad_options(req);
  const mpfr_prec_t bits = bits_for_digits(opts.digits + 15);
  const PrecisionReal X = ball(x, bits);
  quadrature::HalfLineIntegrand f = [&](const Real& u) {
    const PrecisionReal U = PrecisionReal::exact(u);
    return tau0_log_weight(U) / (X + exp(-U));
  };
  const PrecisionReal integral = converged(quadrature::exp_sinh(f, opts), "g Stieltjes");
  return checked(1L / (X + 1L) + integral, req, "g Stieltjes");
}

PrecisionReal d_normalization(const EvalRequest& req) {
  const quadrature::Options opts = quad_options(req);
  // (0, 1] through s = e^-v: d(s) s as a function of v
  quadrature::HalfLineIntegrand near = [&](const Real& v) {
    const PrecisionReal V = PrecisionReal::exact(v);
    const PrecisionReal pi = pi_ball(v.precision());
    if (v > Real(1L << 40, 64)) {
      // s = e^-v is below 10^-(4e11): e^-s = 1 and c/s = 1 up to a relative
      // error far under 2^-64
      PrecisionReal limit = 1L / (square(V - 1L) + square(pi));
      Real slack(64L);
      mpfr_mul_2si(slack.get(), up64(limit.upper()).get(), -64, MPFR_RNDU);
      limit.widen(slack);
      return limit;
    }
    const PrecisionReal S = exp(-V);
    const PrecisionReal e = exp(-S);
    const PrecisionReal c = -expm1(-S);
    const PrecisionReal a = e * (-S - log(c)) - 1L;
    return e / ((c / S) * (square(a) + square(pi * e)));
  };
  quadrature::HalfLineIntegrand far = [&](const Real& x) {
    const PrecisionReal S = PrecisionReal::exact(x) + 1L;
    const PrecisionReal e = exp(-S);
    if (!e.certainly_positive()) {
      // beyond the exponent range; the integrand is below the least positive number
      PrecisionReal zero = PrecisionReal::exact(0L, x.precision());
      Real least(64L);
      mpfr_nextabove(least.get());
      return zero.widen(least);
    }
    return e * tau0(-expm1(-S), e);
  };
  const PrecisionReal a = converged(quadrature::exp_sinh(near, opts), "d on (0,1]");
  const PrecisionReal b = converged(quadrature::exp_sinh(far, opts), "d on [1,inf)");
  return checked(a + b, req, "d normalization");
}

namespace {

/// int_0^inf k(s x) phi_alpha(s) ds with phi from its integral formula.
PrecisionReal phi_transform(const BigRational& alpha, const BigRational& x, const EvalRequest& req, bool bernstein) {
  const quadrature::Options opts = quad_options(req);
  const mpfr_prec_t bits = bits_for_digits(opts.digits + 15);
  const PrecisionReal X = ball(x, bits);
  quadrature::HalfLineIntegrand f = [&](const Real& s) {
    const PrecisionReal S = PrecisionReal::exact(s);
    const PrecisionReal kernel = bernstein ? -expm1(-(S * X)) : exp(-(S * X));
    if (kernel.value.is_zero() && kernel.abs_error.is_zero()) return kernel;
    // the outer weights grow like s, so phi is needed to relative accuracy
    const long scale = std::max(0L, s.decimal_exponent() + 1);
    const EvalRequest inner = req.with_digits(req.precision_digits + 3 + static_cast<int>(scale));
    return kernel * eval_phi_integral(alpha, s.to_rational(), inner);
  };
  return converged(quadrature::exp_sinh(f, opts), "phi transform");
}

}  // namespace

PrecisionReal check_bernstein_representation(const BigRational& alpha, const BigRational& x,
                                             const EvalRequest& req) {
  require_bernstein_alpha(alpha);
  require_positive(x, "x");
  req.validate();
  if (alpha.is_zero()) return PrecisionReal::exact(0L, req.working_bits());
  const PrecisionReal h = eval_h(alpha, x, req.with_digits(req.precision_digits + 3));
  return abs(h - 1L - phi_transform(alpha, x, req, true));
}

PrecisionReal check_laplace_representation(const BigRational& alpha, const BigRational& x, const EvalRequest& req) {
  require_bernstein_alpha(alpha);
  require_positive(x, "x");
  req.validate();
  if (alpha.is_zero()) return PrecisionReal::exact(0L, req.working_bits());
  const EvalRequest fine = req.with_digits(req.precision_digits + 3);
  const PrecisionReal h = eval_h(alpha, x, fine);
  const PrecisionReal ea = exp(ball(alpha, req.working_bits(3)));
  return abs(ea - h - phi_transform(alpha, x, req, false));
}

}  // namespace hbf::functions
