#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hbf/errors.hpp"
#include "hbf/exactcore/big_rational.hpp"
#include "hbf/exactcore/polynomial.hpp"
#include "hbf/exactcore/roots.hpp"
#include "support.hpp"

using namespace hbf;
using hbf::test::Q;

namespace {

RationalPolynomial from_roots(const std::vector<BigRational>& roots) {
  RationalPolynomial p{BigRational(1)};
  for (const auto& r : roots) p = p * RationalPolynomial{-r, BigRational(1)};
  return p;
}

/// Lagrange extrapolation to h = 0 of the difference quotient sampled at h = 1..m.
BigRational extrapolated_slope(const RationalPolynomial& p, const BigRational& x, int m) {
  BigRational total;
  for (int i = 1; i <= m; ++i) {
    const BigRational hi(i);
    BigRational weight(1);
    for (int j = 1; j <= m; ++j) {
      if (j != i) weight *= BigRational(j) / BigRational(j - i);
    }
    total += weight * (p(x + hi) - p(x)) / hi;
  }
  return total;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Q("2.188585") == BigRational(437717, 200000));
  CHECK(Q("1e-3") == BigRational(1, 1000));
  CHECK(Q("-0.5") == BigRational(-1, 2));
  CHECK(Q("6/-4") == BigRational(-3, 2));
  CHECK(Q("6/-4").denominator() == 2);
  CHECK(Q("  7 ") == BigRational(7));
  CHECK(BigRational(4, 6).to_string() == "2/3");
  CHECK(BigRational(5).to_string() == "5/1");
  CHECK(BigRational(0).to_string() == "0/1");
  CHECK_THROWS_AS(Q("abc"), DomainError);
  CHECK_THROWS_AS(Q("1/0"), DomainError);
  CHECK_THROWS_AS(Q(""), DomainError);
  CHECK_THROWS_AS(Q("1.2.3"), DomainError);
}

TEST_CASE("rational arithmetic is exact") {
  const BigRational a(1, 3), b(1, 6);
  CHECK(a + b == BigRational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == BigRational(1, 18));
  CHECK(a / b == BigRational(2));
  CHECK(-a < b);
  CHECK(BigRational(2, 3).pow(-2) == BigRational(9, 4));
  CHECK(BigRational(-7, 2).floor() == -4);
  CHECK(BigRational(-7, 2).ceil() == -3);
  CHECK_THROWS_AS(BigRational(0).inverse(), DomainError);
  CHECK(BigRational(1, 8).to_decimal(2) == "0.13");
  CHECK(BigRational(-1, 8).to_decimal(2) == "-0.13");
  CHECK(BigRational(2).to_decimal(0) == "2");
  CHECK(factorial(20) == mpz_class("2432902008176640000"));
  CHECK(binomial(50, 25) == mpz_class("126410606437752"));
}

TEST_CASE("poly_eval") {
  const RationalPolynomial p{BigRational(2), Q("-1/3"), Q("-1/18"), Q("-1/1620"), Q("47/19440")};
  CHECK(p.degree() == 4);
  CHECK(poly_eval(p, BigRational(0)) == BigRational(2));
  CHECK(poly_eval(RationalPolynomial{BigRational(0), BigRational(1)}, Q("7/3")) == Q("7/3"));
  CHECK(poly_eval(p, BigRational(3)) ==
        BigRational(2) - 1 - Q("1/2") - Q("1/60") + Q("47/19440") * BigRational(81));
  CHECK(RationalPolynomial{BigRational(0), BigRational(0)}.is_zero());
  CHECK(RationalPolynomial{}.degree() == -1);
}

TEST_CASE("poly_derivative") {
  CHECK(poly_derivative(RationalPolynomial{BigRational(2), Q("-1/3")}) == RationalPolynomial{Q("-1/3")});
  CHECK(poly_derivative(RationalPolynomial{BigRational(0), BigRational(0), BigRational(1)}) ==
        RationalPolynomial{BigRational(0), BigRational(2)});
  CHECK(poly_derivative(RationalPolynomial{BigRational(5)}).is_zero());

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<BigRational> c;
    const int degree = trial % 6;
    for (int i = 0; i <= degree; ++i) c.emplace_back(coef(rng), den(rng));
    const RationalPolynomial p(c);
    const BigRational x(coef(rng), den(rng));
    CHECK(extrapolated_slope(p, x, std::max(1, p.degree())) == poly_derivative(p)(x));
  }
}

TEST_CASE("poly_divmod reconstructs the dividend") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<BigRational> a, b;
    for (int i = 0; i <= 6; ++i) a.emplace_back(coef(rng), 1 + i);
    for (int i = 0; i <= 2; ++i) b.emplace_back(coef(rng), 3);
    b.back() = BigRational(1, 2);
    const RationalPolynomial pa(a), pb(b);
    auto [q, r] = poly_divmod(pa, pb);
    CHECK(q * pb + r == pa);
    CHECK(r.degree() < pb.degree());
  }
  CHECK_THROWS_AS(poly_divmod(RationalPolynomial{BigRational(1)}, RationalPolynomial{}), DomainError);
}

TEST_CASE("isolate_positive_roots on small cases") {
  CHECK(isolate_positive_roots(RationalPolynomial{BigRational(1), BigRational(1)}).empty());
  auto one = isolate_positive_roots(RationalPolynomial{BigRational(-1), BigRational(0), BigRational(1)});
  REQUIRE(one.size() == 1);
  CHECK(one[0].contains(BigRational(1)));
  CHECK_THROWS_AS(isolate_positive_roots(RationalPolynomial{}), DomainError);
  CHECK(isolate_positive_roots(RationalPolynomial{BigRational(3)}).empty());
  // a root at 0 is not positive
  CHECK(isolate_positive_roots(RationalPolynomial{BigRational(0), BigRational(1)}).empty());
}

TEST_CASE("Sturm counts on products of rational roots and x^2+1") {
  const RationalPolynomial quad{BigRational(1), BigRational(0), BigRational(1)};
  const std::vector<std::vector<BigRational>> cases{
      {Q("1/3"), Q("2"), Q("7/2")},
      {Q("1"), Q("1"), Q("2")},
      {Q("-1"), Q("1/1000"), Q("1/999"), Q("5")},
      {Q("1/2"), Q("1/2"), Q("1/2"), Q("3/2")},
      {Q("-3"), Q("-2")},
  };
  for (const auto& roots : cases) {
    const RationalPolynomial p = from_roots(roots) * quad;
    std::vector<BigRational> positive;
    for (const auto& r : roots) {
      if (r.sign() > 0 && std::find(positive.begin(), positive.end(), r) == positive.end()) positive.push_back(r);
    }
    std::sort(positive.begin(), positive.end());
    PositiveRootIsolator iso(p);
    CHECK(iso.count() == static_cast<int>(positive.size()));
    const auto intervals = iso.isolate();
    REQUIRE(intervals.size() == positive.size());
    for (std::size_t i = 0; i < intervals.size(); ++i) {
      CHECK(intervals[i].contains(positive[i]));
      if (i > 0) CHECK(intervals[i - 1].hi <= intervals[i].lo);
      const auto fine = iso.refine(intervals[i], BigRational(1, 1000000));
      CHECK(fine.width() <= BigRational(1, 1000000));
      CHECK(fine.contains(positive[i]));
    }
    SturmSequence sturm(p);
    CHECK(sturm.count_roots(Q("-10"), Q("10") + Q("1/7")) ==
          static_cast<int>(std::set<BigRational>(roots.begin(), roots.end()).size()));
  }
}

TEST_CASE("isolation agrees with a fine grid scan on random polynomials") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coef(-20, 20), degree_dist(1, 10);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<BigRational> c;
    const int degree = degree_dist(rng);
    for (int i = 0; i <= degree; ++i) c.emplace_back(coef(rng), 1 + (i % 3));
    if (c.back().is_zero()) c.back() = BigRational(1);
    const RationalPolynomial p(c);
    PositiveRootIsolator iso(p);
    const auto intervals = iso.isolate();
    CHECK(static_cast<int>(intervals.size()) == iso.count());
    const RationalPolynomial& sf = iso.squarefree_part();
    for (const auto& I : intervals) {
      if (I.is_point()) {
        CHECK(p(I.lo).is_zero());
      } else {
        CHECK(sf(I.lo).sign() * sf(I.hi).sign() < 0);
      }
    }
    // every sign change on a grid of (0, bound] lies in one of the intervals
    const BigRational bound = iso.root_bound();
    const int steps = 400;
    BigRational prev_x(0);
    int prev_sign = sf(bound / BigRational(steps * 8)).sign();
    prev_x = bound / BigRational(steps * 8);
    int changes = 0;
    for (int k = 1; k <= steps; ++k) {
      const BigRational x = bound * BigRational(k, steps);
      const int s = sf(x).sign();
      if (s != 0 && prev_sign != 0 && s != prev_sign) {
        ++changes;
        const bool inside = std::any_of(intervals.begin(), intervals.end(), [&](const RationalInterval& I) {
          return I.hi >= prev_x && I.lo <= x;
        });
        CHECK(inside);
      }
      if (s != 0) {
        prev_sign = s;
        prev_x = x;
      }
    }
    CHECK(changes <= iso.count());
  }
}
