#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "hbf/errors.hpp"
#include "hbf/functions/functions.hpp"
#include "hbf/moments/moments.hpp"
#include "support.hpp"

using namespace hbf;
using namespace hbf::functions;
using hbf::test::agrees;
using hbf::test::Q;

namespace {

EvalRequest digits(int d) {
  EvalRequest r;
  r.precision_digits = d;
  return r;
}

}  // namespace

// Reference decimals below were produced with mpmath at 50 digits; the
// integrals defining F and tau0 moments use the substitution t = e^-u.

TEST_CASE("closed forms") {
  const auto req = digits(30);
  CHECK(agrees(eval_rho(Q("1"), req), "0.19314718055994530941723212145817656807550", 32));
  CHECK(agrees(eval_g(Q("1"), req), "1.2943497247810449154026922159710449940652", 32));
  CHECK(agrees(eval_tau0(Q("0.5"), req), "0.57680087828400188486198051572031130907217", 32));
  CHECK(agrees(eval_tau0(Q("0.015"), req), "3.4503854016980833694524490878974947404988", 32));
  CHECK(agrees(eval_h(Q("1"), Q("1000000"), digits(25)), "2.718280469319376883819799708454356392751645026669", 27));
  CHECK(agrees(eval_h(Q("2"), Q("1"), req), "4", 32));
  CHECK(eval_rho(Q("1"), req).meets(30));
  CHECK(eval_g(Q("1"), digits(15)).meets(15));
}

TEST_CASE("tau0 at 1/2 equals 8/(4+pi^2)") {
  const auto v = eval_tau0(Q("1/2"), digits(40));
  const PrecisionReal p = pi_ball(300);
  const PrecisionReal closed = PrecisionReal::exact(8L, 300) / (p * p + 4L);
  CHECK(agrees(v, closed, 45));
}

TEST_CASE("tau0 minimum") {
  const auto m = tau0_min(digits(25));
  CHECK(agrees(m.t_star, "0.591674131723645329241153534674", 24));
  CHECK(agrees(m.m, "0.568798950932985224383218625524", 24));
  // monotone on each side of t* on a grid, and convex second differences
  const auto req = digits(20);
  std::vector<double> v;
  for (int i = 1; i < 100; ++i) v.push_back(eval_tau0(BigRational(i, 100), req).value.to_double());
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double t = static_cast<double>(i + 1) / 100.0;
    if (t <= 0.59) CHECK(v[i] < v[i - 1]);
    if (t >= 0.60) CHECK(v[i] > v[i - 1]);
    if (i + 1 < v.size()) CHECK(v[i + 1] - 2 * v[i] + v[i - 1] >= 0);
  }
}

TEST_CASE("d") {
  CHECK(agrees(eval_d(Q("10"), digits(25)), "4.5360793387771940416e-05", 24));
  CHECK(agrees(d_normalization(digits(20)), "1", 20));
}

TEST_CASE("integral representations agree with closed forms") {
  const auto req = digits(20);
  for (const char* x : {"0.1", "1", "10", "100"}) {
    CAPTURE(x);
    CHECK(agrees(g_stieltjes_integral(Q(x), req), eval_g(Q(x), req), 20));
  }
  CHECK(agrees(rho_laplace_integral(Q("2"), req), eval_rho(Q("2"), req), 20));
  for (const char* x : {"0.5", "2"}) CHECK(agrees(rho_s2_integral(Q(x), req), eval_rho(Q(x), req), 20));
  CHECK(agrees(rho_s2_integral(Q("2"), req), "0.0721317747748310486446797821", 20));
}

TEST_CASE("x g(x) tends to 2") {
  const auto v = eval_g(Q("100000000"), digits(20));
  CHECK(agrees(v * 100000000L, "2", 6));
}

TEST_CASE("moment oracle") {
  const auto req = digits(20);
  const auto table = moments::moment_table(20);
  CHECK(agrees(moment_oracle(0, req), "1", 20));
  CHECK(agrees(moment_oracle(5, req), "0.43062904174015285126", 19));
  CHECK(agrees(moment_oracle(20, req), "0.30138100181869344135366146622175722", 19));
  for (std::size_t n : {1u, 2u, 7u, 13u}) {
    const auto exact = PrecisionReal::from_rational(table->t[n], 200);
    CHECK(agrees(moment_oracle(n, req), exact, 20));
  }
}

TEST_CASE("F") {
  const auto req = digits(25);
  CHECK(agrees(eval_F(Q("2"), Q("0.1"), req), "1.779010569064952518421514665462394", 25));
  CHECK(agrees(eval_F(Q("2"), Q("1"), req), "0.593730691327555101733914495776538182176", 25));
  CHECK(agrees(eval_F(Q("2"), Q("5"), req), "0.074768517586719750749653414302635704439", 25));
  CHECK(agrees(eval_F(Q("2"), Q("20"), req), "0.2039950910554534773817014090749237979484", 25));
  CHECK(agrees(eval_F(Q("0"), Q("1"), req), "1.122212926641785815351819415130694712393", 25));
  const PrecisionReal e = exp(PrecisionReal::exact(1L, 200));
  CHECK(agrees(scaled_F_integral(Q("2"), Q("1"), req), eval_F(Q("2"), Q("1"), req) * e, 24));
}

TEST_CASE("G and M") {
  const auto req = digits(20);
  CHECK(agrees(eval_G(Q("2"), Q("3"), req), "1.10243636033928012421", 19));
  CHECK(eval_G(Q("2"), Q("3"), req).certainly_positive());
  CHECK(agrees(eval_G(Q("1"), Q("0"), req), "2", 20));
  CHECK(agrees(eval_M(Q("3.37"), req), "2.188588577143", 11));
  CHECK(agrees(eval_M(Q("0.01"), req), "400.0022246916639", 12));
}

TEST_CASE("G is strictly decreasing in alpha") {
  const auto req = digits(20);
  for (const char* x : {"0.5", "2", "3.37", "10"}) {
    for (const auto& [lo, hi] : std::vector<std::pair<const char*, const char*>>{{"0", "1"}, {"2", "2.1"}, {"2.188585", "2.18859"}}) {
      CAPTURE(x);
      CAPTURE(lo);
      const auto a = eval_G(Q(lo), Q(x), req);
      const auto b = eval_G(Q(hi), Q(x), req);
      CHECK((a - b).certainly_positive());
    }
  }
  for (std::size_t n = 1; n <= 40; ++n) {
    CHECK(moments::G_coefficient(n, Q("2")) - moments::G_coefficient(n, Q("2.3")) > 0);
  }
}

TEST_CASE("phi") {
  const auto req = digits(25);
  CHECK(agrees(eval_phi_series(Q("0.5"), Q("0"), req), "0.4121803176750320367121626969535408929134", 25));
  CHECK(agrees(eval_phi_series(Q("0.5"), Q("1"), req), "0.1919621299920941662478154083445079241804", 25));
  CHECK(agrees(eval_phi_series(Q("0.5"), Q("2"), req), "0.09533788460426565809498293888266804113102", 25));
  CHECK(agrees(eval_phi_series(Q("0.5"), Q("10"), req), "0.004427904298016723535538189084569145196677", 25));
  const PrecisionReal half_e = exp(PrecisionReal::exact(1L, 200)) / 2L;
  CHECK(agrees(eval_phi_series(Q("1"), Q("0"), req), half_e, 25));
  for (const char* s : {"1", "2"}) {
    CHECK(agrees(eval_phi_integral(Q("0.5"), Q(s), digits(20)), eval_phi_series(Q("0.5"), Q(s), digits(20)), 20));
  }
  CHECK(agrees(eval_phi_integral(Q("1"), Q("3"), digits(20)), eval_phi_series(Q("1"), Q("3"), digits(20)), 20));
  PhiSeries series(Q("2.31"), Q("5"), 15);
  CHECK(series.value(Q("5")).certainly_negative());
}

TEST_CASE("Laplace representation of e^alpha - h_alpha") {
  const auto r = check_laplace_representation(Q("1"), Q("1"), digits(12));
  CHECK(r.lower() <= 0L);
  CHECK(hbf::test::err(r) < 1e-10);
  CHECK(check_bernstein_representation(Q("0"), Q("3"), digits(12)).value.is_zero());
}

TEST_CASE("derivative identities by central differences") {
  const int D = 30;
  const auto req = digits(D);
  const BigRational step = BigRational(10).pow(-(D / 3));
  for (const char* alpha : {"0.5", "1", "2"}) {
    for (const char* x : {"0.5", "1", "3"}) {
      CAPTURE(alpha);
      CAPTURE(x);
      const BigRational a = Q(alpha), X = Q(x);
      const auto hp = eval_h(a, X + step, req), h0 = eval_h(a, X, req), hm = eval_h(a, X - step, req);
      const auto two_step = PrecisionReal::from_rational(step * BigRational(2), 200);
      const auto step_sq = PrecisionReal::from_rational(step * step, 200);
      const auto d1 = (hp - hm) / two_step;
      const auto d2 = (hp - h0 * 2L + hm) / step_sq;
      const auto rho = eval_rho(X, req);
      const auto g = eval_g(X, req);
      const auto alpha_ball = PrecisionReal::from_rational(a, 200);
      const auto expected1 = alpha_ball * h0 * rho;
      const auto expected2 = g - alpha_ball * rho;
      CHECK(abs((d1 - expected1) / expected1).value.to_double() < 1e-6);
      CHECK(abs((-d2 / d1 - expected2) / expected2).value.to_double() < 1e-6);
    }
  }
}

TEST_CASE("results hold up at doubled precision") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> pick(0, 6), num(1, 400);
  using Fn = std::function<PrecisionReal(const BigRational&, const EvalRequest&)>;
  const std::vector<Fn> fns{
      [](const BigRational& x, const EvalRequest& r) { return eval_rho(x, r); },
      [](const BigRational& x, const EvalRequest& r) { return eval_g(x, r); },
      [](const BigRational& x, const EvalRequest& r) { return eval_h(Q("2.188585"), x, r); },
      [](const BigRational& x, const EvalRequest& r) { return eval_tau0(x / BigRational(401), r); },
      [](const BigRational& x, const EvalRequest& r) { return eval_G(Q("2"), x / BigRational(20), r); },
      [](const BigRational& x, const EvalRequest& r) { return eval_M(x / BigRational(40), r); },
      [](const BigRational& x, const EvalRequest& r) { return eval_d(x / BigRational(10), r); },
  };
  for (int i = 0; i < 100; ++i) {
    const int which = pick(rng);
    const BigRational x(num(rng), 7);
    CAPTURE(which);
    CAPTURE(x.to_string());
    const auto low = fns[which](x, digits(20));
    const auto high = fns[which](x, digits(40));
    CHECK(low.meets(20));
    CHECK(agrees(low, high, 300));
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(eval_rho(Q("0")), DomainError);
  CHECK_THROWS_AS(eval_g(Q("-1")), DomainError);
  CHECK_THROWS_AS(eval_h(Q("1"), Q("0")), DomainError);
  CHECK_THROWS_AS(eval_tau0(Q("0")), DomainError);
  CHECK_THROWS_AS(eval_tau0(Q("1")), DomainError);
  CHECK_THROWS_AS(eval_G(Q("2"), Q("-1")), DomainError);
  CHECK_THROWS_AS(eval_M(Q("0")), DomainError);
  CHECK_THROWS_AS(eval_d(Q("0")), DomainError);
  CHECK_THROWS_AS(eval_F(Q("2"), Q("0")), DomainError);
  CHECK_THROWS_AS(eval_phi_integral(Q("2"), Q("1")), DomainError);
  CHECK_THROWS_AS(check_bernstein_representation(Q("1.5"), Q("1")), DomainError);
  CHECK_THROWS_AS(eval_rho(Q("1"), digits(0)), DomainError);
}
