#include "hbf/moments/moments.hpp"

#include <mutex>

#include "hbf/errors.hpp"

namespace hbf::moments {

namespace {

/// Extends rho, s and t in place up to n_max.
void extend(MomentTable& table, std::size_t n_max) {
  if (table.rho.empty()) {
    table.rho.emplace_back(1);
    table.s.emplace_back(1);
    table.t.emplace_back(1);
    table.a.emplace_back(1);
  }
  for (std::size_t n = table.rho.size(); n <= n_max; ++n) {
    // rho_n = sum_{k<n} rho_k * 2 (-1)^{n-1-k} / ((n-k+1)(n-k+2))
    mpq_class rho_n = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t m = n - k;
      mpq_class w(mpz_class(2), mpz_class(static_cast<unsigned long>((m + 1) * (m + 2))));
      w.canonicalize();
      if ((n - 1 - k) % 2 == 1) w = -w;
      rho_n += table.rho[k].raw() * w;
    }
    table.rho.emplace_back(std::move(rho_n));

    // s_n = s_{n-1} + 2 (-1)^n rho_n
    BigRational step = BigRational(2) * table.rho[n];
    table.s.push_back(n % 2 == 0 ? table.s[n - 1] + step : table.s[n - 1] - step);

    mpq_class t_n = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      mpq_class term = table.s[k].raw() * mpq_class(binomial(n, k));
      if (k % 2 == 0) {
        t_n += term;
      } else {
        t_n -= term;
      }
    }
    table.t.emplace_back(std::move(t_n));
    table.a.push_back(table.t[n].inverse() - table.t[n - 1].inverse());
  }
  table.n_max = table.rho.size() - 1;
}

MomentTable truncated(const MomentTable& full, std::size_t n_max) {
  MomentTable out;
  out.n_max = n_max;
  out.rho.assign(full.rho.begin(), full.rho.begin() + static_cast<std::ptrdiff_t>(n_max + 1));
  out.s.assign(full.s.begin(), full.s.begin() + static_cast<std::ptrdiff_t>(n_max + 1));
  out.t.assign(full.t.begin(), full.t.begin() + static_cast<std::ptrdiff_t>(n_max + 1));
  out.a.assign(full.a.begin(), full.a.begin() + static_cast<std::ptrdiff_t>(n_max + 1));
  return out;
}

}  // namespace

std::shared_ptr<const MomentTable> moment_table(std::size_t n_max) {
  static std::mutex mutex;
  static std::shared_ptr<const MomentTable> cache;
  std::lock_guard lock(mutex);
  if (!cache || cache->n_max < n_max) {
    // Grow geometrically so repeated small extensions stay cheap.
    MomentTable next = cache ? *cache : MomentTable{};
    const std::size_t target = cache ? std::max(n_max, cache->n_max + cache->n_max / 2) : n_max;
    extend(next, target);
    cache = std::make_shared<const MomentTable>(std::move(next));
  }
  return cache;
}

MomentTable build_moment_table(std::size_t n_max) { return truncated(*moment_table(n_max), n_max); }

std::vector<BigRational> rho_coeffs(std::size_t n_max) { return build_moment_table(n_max).rho; }
std::vector<BigRational> s_moments(std::size_t n_max) { return build_moment_table(n_max).s; }
std::vector<BigRational> t_moments(std::size_t n_max) { return build_moment_table(n_max).t; }
std::vector<BigRational> a_sequence(std::size_t n_max) { return build_moment_table(n_max).a; }

std::vector<BigRational> binomial_transform(std::span<const BigRational> seq) {
  std::vector<BigRational> out;
  out.reserve(seq.size());
  for (std::size_t n = 0; n < seq.size(); ++n) {
    mpq_class acc = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      mpq_class term = seq[k].raw() * mpq_class(binomial(n, k));
      if (k % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    out.emplace_back(std::move(acc));
  }
  return out;
}

std::vector<RationalPolynomial> p_polynomials(std::size_t n_max) {
  std::vector<RationalPolynomial> p;
  p.reserve(n_max + 1);
  p.push_back(RationalPolynomial({BigRational(1)}, "alpha"));
  const RationalPolynomial alpha({BigRational(0), BigRational(1)}, "alpha");
  for (std::size_t n = 0; n < n_max; ++n) {
    RationalPolynomial sum({}, "alpha");
    for (std::size_t k = 0; k <= n; ++k) {
      sum = sum + BigRational(static_cast<long>(k + 1), static_cast<long>(k + 2)) * p[n - k];
    }
    RationalPolynomial next = BigRational(1, static_cast<long>(n + 1)) * (alpha * sum);
    next.set_variable("alpha");
    p.push_back(std::move(next));
  }
  return p;
}

BigRational G_coefficient(std::size_t n, const BigRational& alpha) {
  if (n == 0) throw DomainError("G_coefficient requires n >= 1");
  const auto table = moment_table(n);
  const BigRational c = table->t[n] - alpha / BigRational(static_cast<long>(n + 1));
  return c / BigRational(factorial(n));
}

}  // namespace hbf::moments
