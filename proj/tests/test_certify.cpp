#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hbf/certify/certify.hpp"
#include "hbf/errors.hpp"
#include "hbf/functions/functions.hpp"
#include "hbf/moments/moments.hpp"
#include "support.hpp"

using namespace hbf;
using namespace hbf::certify;
using hbf::test::Q;

namespace {

/// t_n from the large-x expansion of g(x) = 1 / (x (x+1) ((x+1) log(1+1/x) - 1)).
std::vector<BigRational> t_from_g_expansion(std::size_t n_max) {
  const std::size_t m = n_max + 2;
  std::vector<BigRational> e(m), inv(m);
  for (std::size_t j = 0; j < m; ++j) e[j] = BigRational(j % 2 ? -1 : 1, static_cast<long>((j + 1) * (j + 2)));
  inv[0] = e[0].inverse();
  for (std::size_t n = 1; n < m; ++n) {
    BigRational acc;
    for (std::size_t k = 1; k <= n; ++k) acc += e[k] * inv[n - k];
    inv[n] = -acc / e[0];
  }
  std::vector<BigRational> s(n_max + 1), t(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    BigRational q;
    for (std::size_t k = 0; k <= n; ++k) q += inv[k] * BigRational((n - k) % 2 ? -1 : 1);
    s[n] = (n % 2 ? -q : q) - BigRational(1);
  }
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const BigRational term = BigRational(mpz_class(binomial(n, k))) * s[k];
      t[n] += k % 2 ? -term : term;
    }
  }
  return t;
}

/// tau0(1-sigma) (1 - sigma^(n+1)) - c as a ball.
PrecisionReal tail_margin(const TailCertificate& cert, long n) {
  const auto power = PrecisionReal::from_rational(cert.sigma.pow(n + 1), 200);
  return cert.tau0_value * (1L - power) - PrecisionReal::from_rational(cert.c, 200);
}

}  // namespace

TEST_CASE("tail thresholds") {
  const auto a = tail_threshold(Q("2"), Q("0.985"));
  CHECK(a.valid);
  CHECK(a.n_threshold == 57);
  const auto b = tail_threshold(Q("2.3"), Q("0.989"));
  CHECK(b.valid);
  CHECK(b.n_threshold == 71);
  for (const auto& cert : {a, b}) {
    CHECK(tail_margin(cert, cert.n_threshold).certainly_positive());
    CHECK(tail_margin(cert, cert.n_threshold - 1).certainly_negative());
  }
  CHECK_FALSE(tail_threshold(Q("2"), Q("0.6")).valid);
  CHECK_THROWS_AS(tail_threshold(Q("2"), Q("1")), DomainError);
  CHECK_THROWS_AS(tail_threshold(Q("2"), Q("0.5")), DomainError);
}

TEST_CASE("range certificates") {
  CHECK(verify_moment_bound(Q("2"), 4, 56).all_pass);
  CHECK(verify_moment_bound(Q("2.3"), 5, 70).all_pass);
  const auto small = verify_moment_bound(Q("2"), 1, 3);
  CHECK_FALSE(small.all_pass);
  CHECK(small.failures == std::vector<long>{1, 2, 3});
  CHECK_THROWS_AS(verify_moment_bound(Q("2"), 5, 4), DomainError);
}

TEST_CASE("range certificates agree with an independent derivation of t_n") {
  const auto t = t_from_g_expansion(20);
  for (const char* c : {"1.5", "2", "2.3"}) {
    const auto cert = verify_moment_bound(Q(c), 0, 20);
    std::vector<long> expected;
    for (long n = 0; n <= 20; ++n) {
      if (t[static_cast<std::size_t>(n)] <= Q(c) / BigRational(n + 1)) expected.push_back(n);
    }
    CHECK(cert.failures == expected);
  }
}

TEST_CASE("P_N construction") {
  const RationalPolynomial p4{Q("2"), Q("-1/3"), Q("-1/18"), Q("-1/1620"), Q("47/19440")};
  CHECK(build_PN(4, Q("2")) == p4);
  CHECK_THROWS_AS(build_PN(0, Q("2")), DomainError);
}

TEST_CASE("P_20 around the split point") {
  const auto pos = certify_PN_positive(20, Q("2.188585"));
  CHECK(pos.positive_on_half_line);
  CHECK(pos.positive_roots == 0);
  const auto neg = certify_PN_positive(20, Q("2.188590"));
  CHECK_FALSE(neg.positive_on_half_line);
  CHECK(neg.positive_roots == 2);

  const auto m = minimize_PN(20, Q("2.188590"));
  CHECK(std::abs(m.x0.value.to_double() - 3.365577650) < 1e-8);
  CHECK(std::abs(m.p.value.to_double() + 2.670164583e-05) < 1e-13);
  CHECK(m.p_rational < 0);
  CHECK(build_PN(20, Q("2.188590"))(m.x_rational) == m.p_rational);

  const auto r = remainder_upper_bound(20, m.x0);
  CHECK(r.value.to_double() == doctest::Approx(2.70405e-9).epsilon(1e-4));
  CHECK(remainder_bound(20, m.x_rational).to_double() == doctest::Approx(2.70405e-9).epsilon(1e-4));
  CHECK_THROWS_AS(remainder_bound(20, Q("22")), DomainError);
  CHECK_THROWS_AS(remainder_bound(20, Q("-1")), DomainError);
}

TEST_CASE("positivity is monotone in alpha") {
  for (const char* a : {"0", "1", "2", "2.1", "2.18", "2.1885", "2.188585"}) {
    CAPTURE(a);
    CHECK(certify_PN_positive(20, Q(a)).positive_on_half_line);
  }
}

TEST_CASE("refutation") {
  const auto r = refutation_certificate(20, Q("2.188590"));
  CHECK(r.refuted);
  CHECK(r.pn_value + r.remainder < 0);
  CHECK(r.remainder == remainder_bound(20, r.x));
  EvalRequest req;
  req.precision_digits = 20;
  CHECK(functions::eval_G(Q("2.188590"), r.x, req).certainly_negative());
  CHECK_FALSE(refute_alpha(20, Q("2.188585")));
  CHECK_FALSE(refute_alpha(20, Q("2")));
  CHECK(refute_alpha(40, Q("2.1885864")));
}

TEST_CASE("beta* bracket") {
  const auto b = bracket_beta_star(20, 5);
  CHECK(b.lower < b.upper);
  CHECK(b.target_met);
  CHECK(b.upper - b.lower <= Q("1e-5"));
  CHECK(b.lower <= Q("2.1885863446"));
  CHECK(Q("2.1885863447") < b.upper);
  CHECK(Q("2.18858") < b.lower);
  CHECK(b.upper < Q("2.18859"));
  CHECK(certify_PN_positive(b.N_used, b.lower).positive_on_half_line);
  CHECK(refute_alpha(b.N_used, b.upper));
  CHECK(b.tail.n_threshold == 71);
  CHECK(b.range.all_pass);

  BracketOptions fixed;
  fixed.auto_escalate = false;
  const auto stuck = bracket_beta_star(20, 12, {}, fixed);
  CHECK_FALSE(stuck.target_met);
  CHECK(stuck.n_insufficient);
  CHECK(stuck.N_used == 20);
  CHECK(stuck.lower < stuck.upper);

  CHECK_THROWS_AS(bracket_beta_star(4, 5), DomainError);
  CHECK_THROWS_AS(bracket_beta_star(20, 0), DomainError);
}

TEST_CASE("phi minimum changes sign near alpha*") {
  const auto below = phi_minimum(Q("2.29"), Q("200"), 15);
  CHECK(below.value.certainly_positive());
  const auto above = phi_minimum(Q("2.31"), Q("200"), 15);
  CHECK(above.value.certainly_negative());
  CHECK(above.value.value.to_double() == doctest::Approx(-4.23e-4).epsilon(0.01));
}

TEST_CASE("Hausdorff differences") {
  const auto table = moments::moment_table(40);
  const auto t10 = hausdorff_check(std::span<const BigRational>(table->t.data(), 11), 10);
  CHECK(t10.all_nonneg);
  const auto t0 = hausdorff_check(std::span<const BigRational>(table->t.data(), 1), 0);
  CHECK(t0.all_nonneg);
  CHECK(t0.min_value == 1);
  const auto t40 = hausdorff_check(std::span<const BigRational>(table->t.data(), 41), 40);
  CHECK(t40.all_nonneg);
  CHECK(t40.min_n == 20);
  CHECK(t40.min_k == 20);
  const std::vector<BigRational> ones(6, BigRational(1));
  const auto flat = hausdorff_check(ones, 5);
  CHECK(flat.all_nonneg);
  CHECK(flat.min_value == 0);

  // reference from a separate Python computation with exact fractions
  const auto a40 = hausdorff_check(std::span<const BigRational>(table->a.data(), 41), 40);
  CHECK_FALSE(a40.all_nonneg);
  CHECK(a40.negative_count == 35);
  CHECK(a40.min_n == 0);
  CHECK(a40.min_k == 39);
  CHECK(a40.min_value.to_decimal(14) == "-0.19394490618050");
  const auto a7 = hausdorff_check(std::span<const BigRational>(table->a.data(), 8), 7);
  CHECK_FALSE(a7.all_nonneg);
  CHECK(hausdorff_check(std::span<const BigRational>(table->a.data(), 7), 6).all_nonneg);

  CHECK_THROWS_AS(hausdorff_check(std::span<const BigRational>(table->t.data(), 3), 5), DomainError);
}
