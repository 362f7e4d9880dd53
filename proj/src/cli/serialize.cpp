#include "hbf/cli/serialize.hpp"

namespace hbf::cli {

std::string fixed_value(const PrecisionReal& x, int decimals) { return x.value.to_fixed(decimals); }

std::string printed_error(const PrecisionReal& x, int decimals) {
  // half a unit in the last printed place
  Real rounding = pow10(-decimals, 64, MPFR_RNDU) / 2L;
  return add_up(x.abs_error, rounding).to_scientific(3, MPFR_RNDU);
}

Json to_json(const BigRational& q) { return q.to_string(); }

Json to_json(const PrecisionReal& x, int decimals) {
  return Json{{"value", fixed_value(x, decimals)},
              {"abs_error", printed_error(x, decimals)},
              {"working_digits", x.working_digits}};
}

namespace {

Json rationals(const std::vector<BigRational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

}  // namespace

Json to_json(const moments::MomentTable& table) {
  return Json{{"n_max", table.n_max},
              {"rho", rationals(table.rho)},
              {"s", rationals(table.s)},
              {"t", rationals(table.t)},
              {"a", rationals(table.a)}};
}

Json to_json(const certify::TailCertificate& c) {
  return Json{{"c", to_json(c.c)},
              {"sigma", to_json(c.sigma)},
              {"tau0_value", to_json(c.tau0_value)},
              {"n_threshold", c.n_threshold},
              {"valid", c.valid}};
}

Json to_json(const certify::RangeCertificate& c) {
  return Json{{"c", to_json(c.c)},
              {"n_from", c.n_from},
              {"n_to", c.n_to},
              {"failures", c.failures},
              {"all_pass", c.all_pass}};
}

Json to_json(const certify::PNMinimum& m) {
  return Json{{"x0", to_json(m.x0)},
              {"p", to_json(m.p, 30)},
              {"x_rational", to_json(m.x_rational)},
              {"p_rational", to_json(m.p_rational)}};
}

Json to_json(const certify::PositivityReport& r) {
  return Json{{"N", r.N},
              {"alpha", to_json(r.alpha)},
              {"positive_on_half_line", r.positive_on_half_line},
              {"positive_roots", r.positive_roots},
              {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)}};
}

Json to_json(const certify::Refutation& r) {
  return Json{{"N", r.N},
              {"alpha", to_json(r.alpha)},
              {"x", to_json(r.x)},
              {"pn_value", to_json(r.pn_value)},
              {"remainder", to_json(r.remainder)},
              {"refuted", r.refuted}};
}

Json to_json(const certify::BetaBracket& b) {
  return Json{{"lower", to_json(b.lower)},
              {"upper", to_json(b.upper)},
              {"N_used", b.N_used},
              {"precision_digits", b.precision_digits},
              {"target_met", b.target_met},
              {"n_insufficient", b.n_insufficient},
              {"steps", b.steps},
              {"lower_report", to_json(b.lower_report)},
              {"upper_report", to_json(b.upper_report)},
              {"tail", to_json(b.tail)},
              {"range", to_json(b.range)}};
}

Json to_json(const certify::AlphaStarEstimate& e) {
  return Json{{"value", to_json(e.value)},
              {"lower", to_json(e.lower)},
              {"upper", to_json(e.upper)},
              {"witness_s", to_json(e.witness_s)},
              {"witness_value", to_json(e.witness_value, 30)},
              {"steps", e.steps},
              {"certified", e.certified}};
}

Json to_json(const certify::HausdorffReport& r) {
  return Json{{"K", r.K},
              {"min_value", to_json(r.min_value)},
              {"min_n", r.min_n},
              {"min_k", r.min_k},
              {"negative_count", r.negative_count},
              {"all_nonneg", r.all_nonneg}};
}

Json envelope(const std::string& command, Json parameters, Json results, Json provenance) {
  return Json{{"command", command},
              {"parameters", std::move(parameters)},
              {"results", std::move(results)},
              {"provenance", std::move(provenance)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hbf::cli
