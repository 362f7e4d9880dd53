#pragma once

#include <string>

#include <json.hpp>

#include "hbf/certify/certify.hpp"
#include "hbf/moments/moments.hpp"

namespace hbf::cli {

using Json = nlohmann::json;

/// "p/q", integers included.
Json to_json(const BigRational& q);
/// {"value", "abs_error", "working_digits"}. The value is printed with
/// `decimals` places and abs_error is rounded up to absorb that rounding.
Json to_json(const PrecisionReal& x, int decimals = 20);

Json to_json(const moments::MomentTable& table);
Json to_json(const certify::TailCertificate& c);
Json to_json(const certify::RangeCertificate& c);
Json to_json(const certify::PNMinimum& m);
Json to_json(const certify::PositivityReport& r);
Json to_json(const certify::Refutation& r);
Json to_json(const certify::BetaBracket& b);
Json to_json(const certify::AlphaStarEstimate& e);
Json to_json(const certify::HausdorffReport& r);

/// {command, parameters, results, provenance}
Json envelope(const std::string& command, Json parameters, Json results, Json provenance);

/// Two-space indented dump; keys are sorted, so equal inputs give equal bytes.
std::string dump(const Json& j);

/// Decimal printing of x with `decimals` places and the matching error bound.
std::string fixed_value(const PrecisionReal& x, int decimals);
std::string printed_error(const PrecisionReal& x, int decimals);

}  // namespace hbf::cli
