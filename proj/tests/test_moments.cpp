#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hbf/moments/moments.hpp"
#include "support.hpp"

using namespace hbf;
using namespace hbf::moments;
using hbf::test::Q;

TEST_CASE("first moments") {
  const auto t = t_moments(5);
  const std::vector<BigRational> expected{Q("1"), Q("2/3"), Q("5/9"), Q("67/135"), Q("371/810"), Q("1465/3402")};
  CHECK(t == expected);
  CHECK(rho_coeffs(2) == std::vector<BigRational>{Q("1"), Q("1/3"), Q("-1/18")});
  const auto table = build_moment_table(0);
  CHECK(table.rho[0] == 1);
  CHECK(table.s[0] == 1);
  CHECK(table.t[0] == 1);
  CHECK(table.a[0] == 1);
}

// Reference values from the large-x expansion of the closed form of g,
// g(x) = sum_n (-1)^n (1 + s_n) / x^(n+1), computed separately with Python fractions.
TEST_CASE("index 12 against an independent expansion") {
  const auto table = build_moment_table(12);
  CHECK(table.rho[12] == Q("-327596658187/148952283480000"));
  CHECK(table.s[12] == Q("641461025039/10639448820000"));
  CHECK(table.t[12] == Q("25438717237553/74476141740000"));
  CHECK(table.a[12] == Q("128364466845590534286000/2004840234787853284441769"));
  CHECK(table.s[6] == Q("52931/510300"));
  CHECK(table.a[3] == Q("72/335"));
}

TEST_CASE("s_n = 1 + 2 sum_{k=1}^n (-1)^k rho_k") {
  const auto table = build_moment_table(60);
  BigRational acc(1);
  for (std::size_t n = 1; n <= 60; ++n) {
    acc += BigRational(n % 2 ? -2 : 2) * table.rho[n];
    CHECK(table.s[n] == acc);
  }
}

TEST_CASE("rho inverts the defining series") {
  const auto rho = rho_coeffs(80);
  for (std::size_t n = 0; n <= 80; ++n) {
    BigRational sum;
    for (std::size_t k = 0; k <= n; ++k) {
      const long m = static_cast<long>(n - k);
      sum += rho[k] * BigRational(m % 2 ? -2 : 2, (m + 1) * (m + 2));
    }
    CHECK(sum == BigRational(n == 0 ? 1 : 0));
  }
}

TEST_CASE("binomial transform is an involution") {
  const auto table = moment_table(200);
  CHECK(binomial_transform(table->s) == table->t);
  CHECK(binomial_transform(table->t) == table->s);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  std::vector<BigRational> seq;
  for (int i = 0; i <= 200; ++i) seq.emplace_back(num(rng), den(rng));
  for (std::size_t n : {0u, 1u, 7u, 64u, 200u}) {
    std::span<const BigRational> prefix(seq.data(), n + 1);
    const auto back = binomial_transform(binomial_transform(prefix));
    CHECK(std::equal(back.begin(), back.end(), prefix.begin(), prefix.end()));
  }
}

TEST_CASE("table invariants") {
  const auto table = moment_table(150);
  BigRational partial;
  for (std::size_t n = 0; n <= 150; ++n) {
    CHECK(table->t[n] > 0);
    CHECK(table->t[n] <= 1);
    CHECK(table->s[n] > 0);
    CHECK(table->s[n] <= 1);
    if (n > 0) CHECK(table->t[n] < table->t[n - 1]);
    partial += table->a[n];
    CHECK(table->t[n] * partial == 1);
  }
}

TEST_CASE("memoized table grows consistently") {
  const auto small = moment_table(10);
  const auto large = moment_table(90);
  REQUIRE(large->n_max >= 90);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(small->t[n] == large->t[n]);
  const auto direct = build_moment_table(90);
  for (std::size_t n = 0; n <= 90; ++n) {
    CHECK(direct.t[n] == large->t[n]);
    CHECK(direct.a[n] == large->a[n]);
  }
}

TEST_CASE("G coefficients") {
  CHECK(G_coefficient(1, Q("2")) == Q("-1/3"));
  CHECK(G_coefficient(2, Q("2")) == Q("-1/18"));
  CHECK(G_coefficient(3, Q("2")) == Q("-1/1620"));
  CHECK(G_coefficient(4, Q("2")) == Q("47/19440"));
  CHECK(G_coefficient(1, Q("0")) == Q("2/3"));
}

TEST_CASE("p_n polynomials") {
  const auto p = p_polynomials(50);
  CHECK(p[0] == RationalPolynomial{BigRational(1)});
  CHECK(p[1] == RationalPolynomial{BigRational(0), Q("1/2")});
  for (std::size_t n = 1; n <= 50; ++n) {
    CHECK(p[n].degree() == static_cast<int>(n));
    CHECK(p[n].coefficient(0).is_zero());
    for (const auto& c : p[n].coefficients()) CHECK(c >= 0);
  }
  // the recursion at a sample point
  const BigRational a = Q("7/3");
  for (std::size_t n = 0; n < 50; ++n) {
    BigRational sum;
    for (std::size_t k = 0; k <= n; ++k) sum += BigRational(static_cast<long>(k + 1), static_cast<long>(k + 2)) * p[n - k](a);
    CHECK(p[n + 1](a) == a / BigRational(static_cast<long>(n + 1)) * sum);
  }
}
