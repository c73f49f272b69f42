#include "report.hpp"

#include "covdeg/closed_forms.hpp"
#include "covdeg/error.hpp"
#include "covdeg/partitions.hpp"
#include "covdeg/poincare.hpp"

#include <algorithm>
#include <exception>
#include <optional>

namespace covdeg {

namespace {

CheckResult check(std::string name, const std::string& expected, const std::string& actual) {
  return CheckResult{std::move(name), expected == actual, expected, actual};
}

void oracle_check(VerificationReport& report, std::size_t order) {
  const TruncatedSeries series = covariant_series(report.d, order);
  const std::vector<BigInt> dims = parallel::dim_covariants_range(report.d, static_cast<int>(order));
  std::size_t mismatches = 0;
  std::string first_bad = "none";
  for (std::size_t i = 0; i <= order; ++i) {
    if (series[i] != ExactRational(dims[i])) {
      if (mismatches++ == 0)
        first_bad = "i=" + std::to_string(i) + ": " + series[i].to_string() + " vs " + dims[i].get_str();
    }
  }
  report.checks.push_back(check("oracle_match_order_" + std::to_string(order), "none", first_bad));
}

void reconstruction_checks(VerificationReport& report, std::size_t guard) {
  const int d = report.d;
  std::optional<PoincareSeries> p;
  try {
    p = poincare_series(d, guard);
  } catch (const ReconstructionError& e) {
    report.reconstruction_failed = true;
    report.checks.push_back({"reconstruction", false, "rational", e.what()});
    return;
  }

  const LaurentHead head = laurent_at_one(p->series, 2);
  const DegreePair closed = degree_pair(d);
  // d = 1: P = 1/(1-z) exactly, so the true head is [1, 0] with pole order 1.
  const std::string expected_psi = d == 1 ? "0" : closed.psi.to_string();
  report.checks.push_back(check("pole_order", std::to_string(d), std::to_string(head.pole_order)));
  report.checks.push_back(check("laurent_deg", closed.degree.to_string(), head.coefficients[0].to_string()));
  report.checks.push_back(check("laurent_psi", expected_psi, head.coefficients[1].to_string()));

  const GorensteinReport g = gorenstein_check(p->series, d);
  const long expected_q = d == 1 ? 1 : g.expected_q;
  report.checks.push_back(check("gorenstein_equation", "true", g.equation_holds ? "true" : "false"));
  report.checks.push_back(check("gorenstein_q", std::to_string(expected_q), std::to_string(g.q)));
  if (d >= 2) {
    // 2 psi / deg = q - d
    const ExactRational ratio = ExactRational(2) * head.coefficients[1] / head.coefficients[0];
    report.checks.push_back(check("two_psi_over_deg", std::to_string(g.q - d), ratio.to_string()));
  }
}

void integral_check(VerificationReport& report) {
  const int d = report.d;
  const ExactRational expected =
      c_constant(d) / (ExactRational(2) * ExactRational(factorial(static_cast<unsigned>(d - 1))));
  report.checks.push_back(check("wolstenholme_integral", expected.to_string() + "*pi", wolstenholme_integral(d, d).to_string()));
}

} // namespace

bool VerificationReport::overall() const {
  return !reconstruction_failed && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerificationReport verify_degree(int d, std::size_t order, std::size_t guard) {
  if (d < 1)
    throw DomainError("verify: d must be positive");
  VerificationReport report;
  report.d = d;
  if (d == 1)
    report.flags.push_back("d=1 degenerate");
  oracle_check(report, order);
  reconstruction_checks(report, guard);
  integral_check(report);
  return report;
}

namespace serial {

std::vector<VerificationReport> verify_range(int first_d, int last_d, std::size_t order) {
  std::vector<VerificationReport> out;
  for (int d = first_d; d <= last_d; ++d)
    out.push_back(verify_degree(d, order));
  return out;
}

} // namespace serial

namespace parallel {

std::vector<VerificationReport> verify_range(int first_d, int last_d, std::size_t order) {
  if (first_d < 1)
    throw DomainError("verify: d must be positive");
  const int count = std::max(0, last_d - first_d + 1);
  std::vector<VerificationReport> out(static_cast<std::size_t>(count));
  // Larger d dominate the cost; hand them out first.
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = count - 1; k >= 0; --k) {
    try {
      out[static_cast<std::size_t>(k)] = verify_degree(first_d + k, order);
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e)
      std::rethrow_exception(e);
  return out;
}

} // namespace parallel

} // namespace covdeg
