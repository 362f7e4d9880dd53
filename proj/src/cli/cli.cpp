#include "hbf/cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hbf/certify/certify.hpp"
#include "hbf/cli/serialize.hpp"
#include "hbf/errors.hpp"
#include "hbf/functions/functions.hpp"
#include "hbf/moments/moments.hpp"

namespace hbf::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

constexpr const char* kBetaStarReference = "2.18858634466175709765";
constexpr const char* kAlphaStarReference = "2.29965644325346130332";
constexpr int kMaxDigits = 2000;

Json provenance() {
  return Json{{"reference",
               {{"alpha_star", kAlphaStarReference},
                {"beta_star", kBetaStarReference},
                {"tail_threshold(c=2, sigma=0.985)", "57"},
                {"tail_threshold(c=2.3, sigma=0.989)", "71"}}},
              {"usage", "published reference values for comparison; not used in any computation"}};
}

int default_digits(int fallback) {
  const char* env = std::getenv("HB_PRECISION_DEFAULT");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > kMaxDigits) {
    throw UsageError("HB_PRECISION_DEFAULT must be an integer in [1, " + std::to_string(kMaxDigits) + "]");
  }
  return static_cast<int>(v);
}

BigRational parse_number(const std::string& name, const std::string& text) {
  try {
    return BigRational::parse(text);
  } catch (const DomainError&) {
    throw UsageError("invalid number for " + name + ": '" + text + "'");
  }
}

std::string cell(const BigRational& q, std::optional<int> decimal) {
  return decimal ? q.to_decimal(*decimal) : q.to_string();
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) line += "  ";
      line += row[i];
      if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
  }
}

/// abs_error as printed with `decimals` places is within 10^-digits.
bool printed_within(const PrecisionReal& x, int decimals, int digits) {
  Real rounding = pow10(-decimals, 64, MPFR_RNDU) / 2L;
  return add_up(x.abs_error, rounding) <= tolerance(digits);
}

// moments

struct MomentsArgs {
  std::size_t n = 0;
  std::string format = "table";
  std::optional<int> decimal;
};

int cmd_moments(const MomentsArgs& a, std::ostream& out) {
  auto table = moments::moment_table(a.n);
  const std::size_t n = a.n;
  auto column = [&](const std::vector<BigRational>& v) {
    Json col = Json::array();
    for (std::size_t i = 0; i <= n; ++i) col.push_back(cell(v[i], a.decimal));
    return col;
  };
  if (a.format == "json") {
    Json params{{"n", n}, {"format", a.format}};
    if (a.decimal) params["decimal"] = *a.decimal;
    Json results{{"n_max", n},
                 {"rho", column(table->rho)},
                 {"s", column(table->s)},
                 {"t", column(table->t)},
                 {"a", column(table->a)}};
    out << dump(envelope("moments", params, results, provenance()));
  } else if (a.format == "csv") {
    out << "n,rho,s,t,a\n";
    for (std::size_t i = 0; i <= n; ++i) {
      out << i << ',' << cell(table->rho[i], a.decimal) << ',' << cell(table->s[i], a.decimal) << ','
          << cell(table->t[i], a.decimal) << ',' << cell(table->a[i], a.decimal) << '\n';
    }
  } else {
    std::vector<std::vector<std::string>> rows{{"n", "rho", "s", "t", "a"}};
    for (std::size_t i = 0; i <= n; ++i) {
      rows.push_back({std::to_string(i), cell(table->rho[i], a.decimal), cell(table->s[i], a.decimal),
                      cell(table->t[i], a.decimal), cell(table->a[i], a.decimal)});
    }
    print_table(out, rows);
  }
  return kSuccess;
}

// certify

struct CertifyArgs {
  std::string c;
  std::string sigma = "0.985";
  long from = 0;
  long to = 0;
  std::string format = "table";
};

int cmd_certify(const CertifyArgs& a, std::ostream& out) {
  const BigRational c = parse_number("--c", a.c);
  const BigRational sigma = parse_number("--sigma", a.sigma);
  if (a.from < 0 || a.to < a.from) throw UsageError("need 0 <= --from <= --to");
  const auto tail = certify::tail_threshold(c, sigma);
  const auto range = certify::verify_moment_bound(c, a.from, a.to);
  const bool pass = tail.valid && range.all_pass;
  const bool contiguous = tail.valid && tail.n_threshold <= a.to + 1;
  if (a.format == "json") {
    Json params{{"c", a.c}, {"sigma", a.sigma}, {"from", a.from}, {"to", a.to}};
    Json results{{"tail", to_json(tail)},
                 {"range", to_json(range)},
                 {"certified", pass},
                 {"covers_all_n_from", contiguous}};
    out << dump(envelope("certify", params, results, provenance()));
  } else {
    out << "claim      t_n > c/(n+1) with c = " << c << '\n';
    out << "tail       sigma = " << sigma << ", tau0(1-sigma) = " << fixed_value(tail.tau0_value, 20) << '\n';
    if (tail.valid) {
      out << "           holds for n >= " << tail.n_threshold << '\n';
    } else {
      out << "           no threshold: c >= tau0(1-sigma)\n";
    }
    out << "range      n = " << a.from << ".." << a.to << ": "
        << (range.all_pass ? std::string("all pass") : std::to_string(range.failures.size()) + " failures")
        << '\n';
    if (!range.failures.empty()) {
      out << "failures  ";
      for (long n : range.failures) out << ' ' << n;
      out << '\n';
    }
    if (pass && !contiguous) out << "note       the tail threshold leaves a gap after --to\n";
    out << "verdict    " << (pass ? "certified" : "not certified") << '\n';
  }
  return pass ? kSuccess : kCertificationFailure;
}

// beta-star

struct BetaArgs {
  std::size_t N = 20;
  int digits = 10;
  bool no_escalate = false;
  std::size_t max_N = 200;
  std::string format = "table";
};

int cmd_beta_star(const BetaArgs& a, std::ostream& out, std::ostream& err) {
  certify::BracketOptions options;
  options.auto_escalate = !a.no_escalate;
  options.max_N = std::max(a.max_N, a.N);
  const auto b = certify::bracket_beta_star(a.N, a.digits, {}, options);
  const int shown = a.digits + 3;
  if (a.format == "json") {
    Json params{{"N", a.N}, {"digits", a.digits}, {"auto_escalate", options.auto_escalate}, {"max_N", options.max_N}};
    Json results = to_json(b);
    results["width"] = to_json(b.upper - b.lower);
    out << dump(envelope("beta-star", params, results, provenance()));
  } else {
    std::vector<std::vector<std::string>> rows{
        {"lower", b.lower.to_string(), "~ " + b.lower.to_decimal(shown)},
        {"upper", b.upper.to_string(), "~ " + b.upper.to_decimal(shown)},
        {"width", (b.upper - b.lower).to_string(), "~ " + (b.upper - b.lower).to_decimal(shown)},
        {"N used", std::to_string(b.N_used), ""},
        {"steps", std::to_string(b.steps), ""},
        {"target", "10^-" + std::to_string(a.digits), b.target_met ? "met" : "not met"},
        {"reference", kBetaStarReference, "comparison only"}};
    print_table(out, rows);
    out << "certified  " << b.lower.to_decimal(shown) << " <= beta* < " << b.upper.to_decimal(shown)
        << "  (decimals rounded to " << shown << " places)\n";
  }
  if (!b.target_met) {
    err << "error: bracket width above 10^-" << a.digits << " at N = " << b.N_used
        << (b.n_insufficient ? "; a larger N is needed" : "") << '\n';
    return kCertificationFailure;
  }
  return kSuccess;
}

// alpha-star

struct AlphaArgs {
  int digits = 6;
  std::string s_max = "200";
  std::string format = "table";
};

int cmd_alpha_star(const AlphaArgs& a, std::ostream& out, std::ostream& err) {
  const BigRational s_max = parse_number("--s-max", a.s_max);
  EvalRequest req;
  req.precision_digits = a.digits;
  const auto e = certify::estimate_alpha_star(req, s_max);
  const int decimals = a.digits + 3;
  if (!printed_within(e.value, decimals, a.digits)) {
    err << "error: estimate error " << e.value.error_string() << " exceeds 10^-" << a.digits << '\n';
    return kCertificationFailure;
  }
  if (a.format == "json") {
    Json params{{"digits", a.digits}, {"s_max", a.s_max}};
    Json results = to_json(e);
    results["value"] = to_json(e.value, decimals);
    out << dump(envelope("alpha-star", params, results, provenance()));
  } else {
    print_table(out, {{"alpha*", fixed_value(e.value, decimals), "+- " + printed_error(e.value, decimals)},
                      {"bracket", e.lower.to_decimal(decimals), e.upper.to_decimal(decimals)},
                      {"witness s", e.witness_s.to_decimal(6), ""},
                      {"steps", std::to_string(e.steps), ""},
                      {"reference", kAlphaStarReference, "comparison only"}});
    out << "status     numerical estimate, not certified\n";
  }
  return kSuccess;
}

// eval

struct EvalArgs {
  std::string fn;
  std::optional<std::string> x, t, s, alpha;
  std::optional<int> digits;
  std::string method = "series";
  std::string format = "table";
};

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  const int digits = a.digits ? *a.digits : default_digits(30);
  auto need = [&](const std::optional<std::string>& v, const char* name) {
    if (!v) throw UsageError(std::string("--fn ") + a.fn + " requires " + name);
    return parse_number(name, *v);
  };
  EvalRequest req;
  req.precision_digits = digits + 1;
  Json params{{"fn", a.fn}, {"digits", digits}};
  PrecisionReal v;
  using namespace functions;
  if (a.fn == "h") {
    const auto al = need(a.alpha, "--alpha");
    const auto x = need(a.x, "--x");
    params["alpha"] = *a.alpha;
    params["x"] = *a.x;
    v = eval_h(al, x, req);
  } else if (a.fn == "rho" || a.fn == "g" || a.fn == "M") {
    const auto x = need(a.x, "--x");
    params["x"] = *a.x;
    v = a.fn == "rho" ? eval_rho(x, req) : a.fn == "g" ? eval_g(x, req) : eval_M(x, req);
  } else if (a.fn == "tau0") {
    const auto t = need(a.t, "--t");
    params["t"] = *a.t;
    v = eval_tau0(t, req);
  } else if (a.fn == "phi") {
    const auto al = need(a.alpha, "--alpha");
    const auto s = need(a.s, "--s");
    params["alpha"] = *a.alpha;
    params["s"] = *a.s;
    params["method"] = a.method;
    v = a.method == "integral" ? eval_phi_integral(al, s, req) : eval_phi_series(al, s, req);
  } else if (a.fn == "G" || a.fn == "F") {
    const auto al = need(a.alpha, "--alpha");
    params["alpha"] = *a.alpha;
    if (a.fn == "G") {
      const auto x = need(a.x, "--x");
      params["x"] = *a.x;
      v = eval_G(al, x, req);
    } else {
      const auto t = need(a.t, "--t");
      params["t"] = *a.t;
      v = eval_F(al, t, req);
    }
  } else {
    const auto s = need(a.s, "--s");
    params["s"] = *a.s;
    v = eval_d(s, req);
  }
  const int decimals = digits + 3;
  if (!printed_within(v, decimals, digits)) {
    err << "error: could not reach 10^-" << digits << " (abs_error " << v.error_string() << ")\n";
    return kCertificationFailure;
  }
  if (a.format == "json") {
    out << dump(envelope("eval", params, to_json(v, decimals), provenance()));
  } else {
    print_table(out, {{"value", fixed_value(v, decimals)},
                      {"abs_error", printed_error(v, decimals)},
                      {"working_digits", std::to_string(v.working_digits)}});
  }
  return kSuccess;
}

// plot-data

struct PlotArgs {
  std::string fn;
  std::string from, to;
  std::size_t points = 100;
  std::optional<std::string> file;
  std::string alpha = "2.188585";
  std::size_t N = 20;
  std::optional<int> digits;
};

int cmd_plot_data(const PlotArgs& a, std::ostream& out) {
  const int digits = a.digits ? *a.digits : default_digits(15);
  const BigRational lo = parse_number("--from", a.from);
  const BigRational hi = parse_number("--to", a.to);
  if (hi < lo) throw UsageError("--to must not be below --from");
  if (a.points == 0) throw UsageError("--points must be positive");
  std::ofstream file;
  if (a.file) {
    file.open(*a.file, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write to '" + *a.file + "'");
  }
  const std::size_t count = lo == hi ? 1 : a.points;
  EvalRequest req;
  req.precision_digits = digits + 1;
  const BigRational alpha = parse_number("--alpha", a.alpha);
  std::optional<RationalPolynomial> pn;
  if (a.fn == "PN") pn = certify::build_PN(a.N, alpha);

  std::ostringstream csv;
  csv << "x,value,abs_error\n";
  for (std::size_t i = 0; i < count; ++i) {
    const BigRational x =
        count == 1 ? lo : lo + (hi - lo) * BigRational(static_cast<long>(i)) / BigRational(static_cast<long>(count - 1));
    PrecisionReal v;
    if (a.fn == "tau0") {
      v = functions::eval_tau0(x, req);
    } else if (a.fn == "M") {
      v = functions::eval_M(x, req);
    } else {
      v = PrecisionReal::from_rational((*pn)(x), bits_for_digits(digits + 20));
    }
    csv << x.to_decimal(12) << ',' << fixed_value(v, digits) << ',' << printed_error(v, digits) << '\n';
  }
  if (a.file) {
    file << csv.str();
    file.close();
    if (!file) throw UsageError("cannot write to '" + *a.file + "'");
  } else {
    out << csv.str();
  }
  return kSuccess;
}

// hausdorff

struct HausdorffArgs {
  std::string seq;
  std::size_t K = 0;
  std::optional<int> decimal;
  std::string format = "table";
};

int cmd_hausdorff(const HausdorffArgs& a, std::ostream& out) {
  auto table = moments::moment_table(a.K);
  const auto& seq = a.seq == "t" ? table->t : a.seq == "s" ? table->s : table->a;
  const auto r = certify::hausdorff_check(std::span<const BigRational>(seq.data(), a.K + 1), a.K);
  const std::string label = a.seq == "a" ? "experimental evidence, not a proof"
                                         : "exact check of all differences with n + k <= K";
  if (a.format == "json") {
    Json params{{"seq", a.seq}, {"K", a.K}};
    Json results = to_json(r);
    if (a.decimal) results["min_value_decimal"] = r.min_value.to_decimal(*a.decimal);
    results["label"] = label;
    out << dump(envelope("hausdorff", params, results, provenance()));
  } else {
    print_table(out, {{"sequence", a.seq},
                      {"K", std::to_string(a.K)},
                      {"min value", cell(r.min_value, a.decimal)},
                      {"rounded", r.min_value.to_decimal(a.decimal.value_or(12)) + " (" +
                                      std::to_string(a.decimal.value_or(12)) + " places)"},
                      {"at (n, k)", "(" + std::to_string(r.min_n) + ", " + std::to_string(r.min_k) + ")"},
                      {"negative", std::to_string(r.negative_count)},
                      {"verdict", r.all_nonneg ? "all nonnegative" : "negative differences found"},
                      {"note", label}});
  }
  return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact moments, special functions and threshold certificates for h_alpha(x) = (1+1/x)^(alpha x)",
               "hbf"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hbf 1.0");

  const std::vector<std::string> formats{"json", "table"};

  MomentsArgs moments_args;
  auto* moments = app.add_subcommand("moments", "exact moment sequences rho, s, t, a");
  moments->add_option("--n", moments_args.n, "largest index")->required()->check(CLI::Range(0, 100000));
  moments->add_option("--format", moments_args.format)->check(CLI::IsMember({"json", "csv", "table"}));
  moments->add_option("--decimal", moments_args.decimal, "rounded display with this many places")
      ->check(CLI::Range(0, 1000));

  CertifyArgs certify_args;
  auto* certify = app.add_subcommand("certify", "certify t_n > c/(n+1): tail threshold plus exact range");
  certify->add_option("--c", certify_args.c)->required();
  certify->add_option("--sigma", certify_args.sigma, "tail parameter in (1/2, 1)")->capture_default_str();
  certify->add_option("--from", certify_args.from)->required();
  certify->add_option("--to", certify_args.to)->required();
  certify->add_option("--format", certify_args.format)->check(CLI::IsMember(formats));

  BetaArgs beta_args;
  auto* beta = app.add_subcommand("beta-star", "certified bracket for beta*");
  beta->add_option("--N", beta_args.N, "truncation order")->capture_default_str()->check(CLI::Range(5, 2000));
  beta->add_option("--digits", beta_args.digits, "target bracket width 10^-digits")
      ->capture_default_str()
      ->check(CLI::Range(1, 60));
  beta->add_flag("--no-escalate", beta_args.no_escalate, "keep N fixed");
  beta->add_option("--max-N", beta_args.max_N)->capture_default_str()->check(CLI::Range(5, 2000));
  beta->add_option("--format", beta_args.format)->check(CLI::IsMember(formats));

  AlphaArgs alpha_args;
  auto* alpha = app.add_subcommand("alpha-star", "numerical estimate of alpha* (not certified)");
  alpha->add_option("--digits", alpha_args.digits)->capture_default_str()->check(CLI::Range(1, 30));
  alpha->add_option("--s-max", alpha_args.s_max, "scan range (0, s_max]")->capture_default_str();
  alpha->add_option("--format", alpha_args.format)->check(CLI::IsMember(formats));

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate one function with an error bound");
  eval->add_option("--fn", eval_args.fn)
      ->required()
      ->check(CLI::IsMember({"h", "rho", "g", "tau0", "phi", "G", "F", "M", "d"}));
  eval->add_option("--x", eval_args.x);
  eval->add_option("--t", eval_args.t);
  eval->add_option("--s", eval_args.s);
  eval->add_option("--alpha", eval_args.alpha);
  eval->add_option("--digits", eval_args.digits, "default 30 or HB_PRECISION_DEFAULT")
      ->check(CLI::Range(1, kMaxDigits));
  eval->add_option("--method", eval_args.method, "phi only")->check(CLI::IsMember({"series", "integral"}));
  eval->add_option("--format", eval_args.format)->check(CLI::IsMember(formats));

  PlotArgs plot_args;
  auto* plot = app.add_subcommand("plot-data", "CSV samples x,value,abs_error");
  plot->add_option("--fn", plot_args.fn)->required()->check(CLI::IsMember({"tau0", "M", "PN"}));
  plot->add_option("--from", plot_args.from)->required();
  plot->add_option("--to", plot_args.to)->required();
  plot->add_option("--points", plot_args.points)->capture_default_str()->check(CLI::Range(1, 1000000));
  plot->add_option("--file", plot_args.file, "write here instead of stdout");
  plot->add_option("--alpha", plot_args.alpha, "PN only")->capture_default_str();
  plot->add_option("--N", plot_args.N, "PN only")->capture_default_str()->check(CLI::Range(1, 2000));
  plot->add_option("--digits", plot_args.digits, "default 15 or HB_PRECISION_DEFAULT")
      ->check(CLI::Range(1, kMaxDigits));

  HausdorffArgs hausdorff_args;
  auto* hausdorff = app.add_subcommand("hausdorff", "finite differences (-1)^k Delta^k mu_n");
  hausdorff->add_option("--seq", hausdorff_args.seq)->required()->check(CLI::IsMember({"t", "s", "a"}));
  hausdorff->add_option("--K", hausdorff_args.K)->required()->check(CLI::Range(0, 5000));
  hausdorff->add_option("--decimal", hausdorff_args.decimal)->check(CLI::Range(0, 1000));
  hausdorff->add_option("--format", hausdorff_args.format)->check(CLI::IsMember(formats));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (moments->parsed()) return cmd_moments(moments_args, out);
    if (certify->parsed()) return cmd_certify(certify_args, out);
    if (beta->parsed()) return cmd_beta_star(beta_args, out, err);
    if (alpha->parsed()) return cmd_alpha_star(alpha_args, out, err);
    if (eval->parsed()) return cmd_eval(eval_args, out, err);
    if (plot->parsed()) return cmd_plot_data(plot_args, out);
    if (hausdorff->parsed()) return cmd_hausdorff(hausdorff_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PrecisionError& e) {
    err << "error: precision not reached: " << e.what() << '\n';
    return kCertificationFailure;
  } catch (const CertificationError& e) {
    err << "error: certification failed: " << e.what() << '\n';
    return kCertificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCertificationFailure;
  }
  return kUsageError;
}

}  // namespace hbf::cli
