#include "cli.hpp"

#include "report.hpp"

#include "covdeg/closed_forms.hpp"
#include "covdeg/error.hpp"
#include "covdeg/numerics.hpp"
#include "covdeg/poincare.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace covdeg::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::optional<int> d;
  std::optional<int> max_d;
  int order = 30;
  std::string format = "json";
  double tol = 1e-9;
  std::string out_path;
  bool all = false;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

Json strings(std::span<const ExactRational> values) {
  Json arr = Json::array();
  for (const auto& v : values)
    arr.push_back(v.to_string());
  return arr;
}

// d values selected by --d / --max-d, starting at `first`.
std::vector<int> degrees(const Options& opt, int first) {
  if (opt.d && opt.max_d)
    throw UsageError("--d and --max-d are mutually exclusive");
  if (opt.d)
    return {*opt.d};
  if (opt.max_d) {
    std::vector<int> out;
    for (int d = first; d <= *opt.max_d; ++d)
      out.push_back(d);
    if (out.empty())
      throw UsageError("--max-d must be at least " + std::to_string(first));
    return out;
  }
  throw UsageError("one of --d or --max-d is required");
}

void require_min(const std::vector<int>& ds, int lo, const char* what) {
  for (int d : ds)
    if (d < lo)
      throw UsageError(std::string(what) + " needs d >= " + std::to_string(lo));
}

// A table rendered either as JSON (already built) or as CSV rows.
struct Output {
  Json json;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
};

void emit(const Output& o, const Options& opt, std::ostream& out) {
  if (opt.format == "csv") {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i)
        out << (i ? "," : "") << cells[i];
      out << '\n';
    };
    line(o.csv_header);
    for (const auto& r : o.csv_rows)
      line(r);
  } else {
    out << o.json.dump() << '\n';
  }
}

Json single_or_array(std::vector<Json> items, bool single) {
  if (single)
    return std::move(items.front());
  Json arr = Json::array();
  for (auto& i : items)
    arr.push_back(std::move(i));
  return arr;
}

int cmd_series(const Options& opt, Output& o) {
  const int d = *opt.d;
  require_min({d}, 1, "series");
  if (opt.order < 0)
    throw UsageError("--order must be non-negative");
  const TruncatedSeries s = covariant_series(d, static_cast<std::size_t>(opt.order));
  o.json = Json{{"d", d}, {"order", opt.order}, {"coeffs", strings(s.coefficients())}};
  o.csv_header = {"i", "coeff"};
  for (std::size_t i = 0; i <= s.order(); ++i)
    o.csv_rows.push_back({std::to_string(i), s[i].to_string()});
  return kOk;
}

int cmd_reconstruct(const Options& opt, Output& o) {
  const int d = *opt.d;
  require_min({d}, 1, "reconstruct");
  const PoincareSeries p = poincare_series(d);
  const auto& num = p.series.numerator();
  const auto& den = p.series.denominator();
  o.json = Json{{"d", d},
                {"num_bound", p.num_bound},
                {"den_bound", p.den_bound},
                {"order_used", p.order_used},
                {"q", den.degree() - num.degree()},
                {"numerator", strings(num.coefficients())},
                {"denominator", strings(den.coefficients())}};
  o.csv_header = {"power", "numerator", "denominator"};
  const int top = std::max(num.degree(), den.degree());
  for (int i = 0; i <= top; ++i)
    o.csv_rows.push_back({std::to_string(i), num.coeff(static_cast<std::size_t>(i)).to_string(),
                          den.coeff(static_cast<std::size_t>(i)).to_string()});
  return kOk;
}

int cmd_degree(const Options& opt, Output& o) {
  const auto ds = degrees(opt, 1);
  require_min(ds, 1, "degree");
  std::vector<Json> items;
  o.csv_header = {"d", "deg", "psi", "degenerate"};
  for (int d : ds) {
    const DegreePair p = degree_pair(d);
    Json j{{"d", d}, {"deg", p.degree.to_string()}, {"psi", p.psi.to_string()}};
    if (p.degenerate)
      j["degenerate"] = true;
    items.push_back(std::move(j));
    o.csv_rows.push_back({std::to_string(d), p.degree.to_string(), p.psi.to_string(), p.degenerate ? "true" : "false"});
  }
  o.json = single_or_array(std::move(items), opt.d.has_value());
  return kOk;
}

Json report_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"expected", c.expected}, {"actual", c.actual}});
  return Json{{"d", r.d}, {"checks", std::move(checks)}, {"flags", r.flags}, {"overall", r.overall()}};
}

int cmd_verify(const Options& opt, Output& o) {
  Options sel = opt;
  if (opt.all && !opt.d && !opt.max_d)
    sel.max_d = 10;
  const auto ds = degrees(sel, 1);
  require_min(ds, 1, "verify");
  if (opt.order < 0)
    throw UsageError("--order must be non-negative");
  const auto order = static_cast<std::size_t>(opt.order);
  const std::vector<VerificationReport> reports =
      ds.size() == 1 ? std::vector<VerificationReport>{verify_degree(ds.front(), order)}
                     : parallel::verify_range(ds.front(), ds.back(), order);

  bool overall = true;
  bool reconstruction_failed = false;
  std::vector<Json> items;
  o.csv_header = {"d", "check", "status", "expected", "actual"};
  for (const auto& r : reports) {
    overall = overall && r.overall();
    reconstruction_failed = reconstruction_failed || r.reconstruction_failed;
    items.push_back(report_json(r));
    for (const auto& c : r.checks)
      o.csv_rows.push_back({std::to_string(r.d), c.name, c.passed ? "pass" : "fail", c.expected, c.actual});
  }
  if (opt.d) {
    o.json = std::move(items.front());
  } else {
    Json arr = Json::array();
    for (auto& i : items)
      arr.push_back(std::move(i));
    o.json = Json{{"reports", std::move(arr)}, {"overall", overall}};
  }
  if (reconstruction_failed)
    return kReconstructionFailed;
  return overall ? kOk : kVerificationFailed;
}

int cmd_invariants(const Options& opt, Output& o) {
  const auto ds = degrees(opt, 3);
  require_min(ds, 3, "invariants-degree");
  std::vector<Json> items;
  o.csv_header = {"d", "deg_invariants"};
  for (int d : ds) {
    const std::string v = deg_invariants_hilbert(d).to_string();
    items.push_back(Json{{"d", d}, {"deg_invariants", v}});
    o.csv_rows.push_back({std::to_string(d), v});
  }
  o.json = single_or_array(std::move(items), opt.d.has_value());
  return kOk;
}

int cmd_integral(const Options& opt, Output& o) {
  const auto ds = degrees(opt, 1);
  require_min(ds, 1, "integral");
  if (!(opt.tol >= 1e-12))
    throw UsageError("--tol must be >= 1e-12");
  std::vector<Json> items;
  o.csv_header = {"d", "quadrature", "closed_form", "closed_form_value", "abs_diff"};
  for (int d : ds) {
    const double quad = integral_sinc_pow(d, opt.tol);
    const PiMultiple exact = wolstenholme_integral(d, d);
    const std::vector<std::string> row{std::to_string(d), format_double(quad), exact.to_string(),
                                       format_double(exact.value()), format_double(std::abs(quad - exact.value()))};
    items.push_back(Json{{"d", d}, {"quadrature", row[1]}, {"closed_form", row[2]}, {"closed_form_value", row[3]}, {"abs_diff", row[4]}});
    o.csv_rows.push_back(row);
  }
  o.json = single_or_array(std::move(items), opt.d.has_value());
  return kOk;
}

int cmd_asymptotics(const Options& opt, Output& o) {
  const std::vector<int> ds = opt.d || opt.max_d ? degrees(opt, 2) : std::vector<int>{50, 100, 200, 400};
  require_min(ds, 2, "asymptotics");
  const auto scan = asymptotic_scan(ds);
  Json arr = Json::array();
  o.csv_header = {"d", "sqrt_d_integral", "integral_target", "integral_rel_error", "deg_scaled", "deg_target", "deg_rel_error"};
  for (const auto& s : scan) {
    const AsymptoticSample g = deg_asymptotic_ratio(s.d);
    const std::vector<std::string> row{std::to_string(s.d), format_double(s.value),    format_double(s.target),
                                       format_double(s.rel_error), format_double(g.value), format_double(g.target),
                                       format_double(g.rel_error)};
    arr.push_back(Json{{"d", s.d},
                       {"sqrt_d_integral", row[1]},
                       {"integral_target", row[2]},
                       {"integral_rel_error", row[3]},
                       {"deg_scaled", row[4]},
                       {"deg_target", row[5]},
                       {"deg_rel_error", row[6]}});
    o.csv_rows.push_back(row);
  }
  o.json = std::move(arr);
  return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poincaré series and degree of the algebra of covariants of a binary form", "covdeg"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_d) {
    auto* d = sub->add_option("--d", opt.d, "degree of the binary form");
    if (needs_d)
      d->required();
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", opt.out_path, "write output to this file");
  };

  auto* series = app.add_subcommand("series", "coefficients dim (C_d)_i for i = 0..order");
  add_common(series, true);
  series->add_option("--order", opt.order, "truncation order");

  auto* reconstruct = app.add_subcommand("reconstruct", "exact rational form of P(C_d, z)");
  add_common(reconstruct, true);

  auto* degree = app.add_subcommand("degree", "deg(C_d) and psi(C_d) from the closed form");
  add_common(degree, false);
  degree->add_option("--max-d", opt.max_d, "all d from 1 to this value");

  auto* verify = app.add_subcommand("verify", "verification report");
  add_common(verify, false);
  verify->add_option("--max-d", opt.max_d, "all d from 1 to this value");
  verify->add_option("--order", opt.order, "oracle comparison order");
  verify->add_flag("--all", opt.all, "verify every d up to --max-d (default 10)");

  auto* invariants = app.add_subcommand("invariants-degree", "Hilbert's degree constant for the invariants");
  add_common(invariants, false);
  invariants->add_option("--max-d", opt.max_d, "all d from 3 to this value");

  auto* integral = app.add_subcommand("integral", "int_0^inf (sin x/x)^d dx by quadrature and closed form");
  add_common(integral, false);
  integral->add_option("--max-d", opt.max_d, "all d from 1 to this value");
  integral->add_option("--tol", opt.tol, "absolute quadrature tolerance");

  auto* asymptotics = app.add_subcommand("asymptotics", "large-d behaviour of the degree");
  add_common(asymptotics, false);
  asymptotics->add_option("--max-d", opt.max_d, "all d from 2 to this value");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "covdeg: " << e.what() << '\n';
    return kUsage;
  }

  Output output;
  int code = kOk;
  try {
    if (series->parsed())
      code = cmd_series(opt, output);
    else if (reconstruct->parsed())
      code = cmd_reconstruct(opt, output);
    else if (degree->parsed())
      code = cmd_degree(opt, output);
    else if (verify->parsed())
      code = cmd_verify(opt, output);
    else if (invariants->parsed())
      code = cmd_invariants(opt, output);
    else if (integral->parsed())
      code = cmd_integral(opt, output);
    else
      code = cmd_asymptotics(opt, output);
  } catch (const UsageError& e) {
    err << "covdeg: " << e.what() << '\n';
    return kUsage;
  } catch (const ReconstructionError& e) {
    err << "covdeg: " << e.what() << '\n';
    return kReconstructionFailed;
  } catch (const DomainError& e) {
    err << "covdeg: " << e.what() << '\n';
    return kUsage;
  } catch (const AccuracyError& e) {
    err << "covdeg: " << e.what() << '\n';
    return kVerificationFailed;
  }

  if (opt.out_path.empty()) {
    emit(output, opt, out);
  } else {
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) {
      err << "covdeg: cannot open " << opt.out_path << '\n';
      return kUsage;
    }
    emit(output, opt, file);
  }
  return code;
}

} // namespace covdeg::cli
