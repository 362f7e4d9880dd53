#include <string>

#include "hbf/certify/certify.hpp"
#include "hbf/errors.hpp"
#include "hbf/functions/functions.hpp"
#include "hbf/moments/moments.hpp"

namespace hbf::certify {

TailCertificate tail_threshold(const BigRational& c, const BigRational& sigma, const EvalRequest& req) {
  if (sigma <= BigRational(1, 2) || sigma >= BigRational(1)) {
    throw DomainError("sigma must lie in (1/2, 1), got " + sigma.to_string());
  }
  req.validate();
  TailCertificate cert;
  cert.c = c;
  cert.sigma = sigma;
  cert.tau0_value = functions::eval_tau0(BigRational(1) - sigma, req);
  const mpfr_prec_t bits = cert.tau0_value.precision();
  const PrecisionReal C = PrecisionReal::from_rational(c, bits);
  if (!(cert.tau0_value - C).certainly_positive()) return cert;
  // n + 1 >= log(1 - c/tau) / log(sigma), evaluated as a ball and rounded up
  const PrecisionReal ratio =
      log1p(-(C / cert.tau0_value)) / log(PrecisionReal::from_rational(sigma, bits));
  const BigRational upper = ratio.upper().to_rational();
  cert.n_threshold = std::max<long>(0, upper.ceil().get_si() - 1);
  cert.valid = true;
  return cert;
}

RangeCertificate verify_moment_bound(const BigRational& c, long n_from, long n_to) {
  if (n_from < 0 || n_to < n_from) {
    throw DomainError("need 0 <= n_from <= n_to, got " + std::to_string(n_from) + ".." + std::to_string(n_to));
  }
  RangeCertificate cert;
  cert.c = c;
  cert.n_from = n_from;
  cert.n_to = n_to;
  const auto table = moments::moment_table(static_cast<std::size_t>(n_to));
  for (long n = n_from; n <= n_to; ++n) {
    if (table->t[static_cast<std::size_t>(n)] <= c / BigRational(n + 1)) cert.failures.push_back(n);
  }
  cert.all_pass = cert.failures.empty();
  return cert;
}

HausdorffReport hausdorff_check(std::span<const BigRational> seq, std::size_t K) {
  if (seq.size() < K + 1) {
    throw DomainError("sequence has " + std::to_string(seq.size()) + " entries, need " + std::to_string(K + 1));
  }
  HausdorffReport report;
  report.K = K;
  std::vector<BigRational> diff(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(K + 1));
  report.min_value = diff[0];
  for (std::size_t k = 0; k <= K; ++k) {
    // diff[n] = (-1)^k Delta^k mu_n for n + k <= K
    for (std::size_t n = 0; n + k <= K; ++n) {
      if (diff[n].sign() < 0) ++report.negative_count;
      if (diff[n] < report.min_value) {
        report.min_value = diff[n];
        report.min_n = n;
        report.min_k = k;
      }
    }
    for (std::size_t n = 0; n + k < K; ++n) diff[n] = diff[n] - diff[n + 1];
  }
  report.all_nonneg = report.negative_count == 0;
  return report;
}

}  // namespace hbf::certify
