#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace covdeg {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  int d = 0;
  std::vector<CheckResult> checks;
  std::vector<std::string> flags;
  /// Set when reconstruction of P(C_d, z) failed; the report is then incomplete.
  bool reconstruction_failed = false;

  bool overall() const;
};

/// Runs, for one d: oracle match of the series through `order`, exact
/// reconstruction with Laurent head vs the closed forms, the Gorenstein
/// functional equation and q, and the Wolstenholme / integral identity.
/// d = 1 is checked against its true (degenerate) values and flagged.
VerificationReport verify_degree(int d, std::size_t order = 30, std::size_t guard = 10);

namespace serial {
std::vector<VerificationReport> verify_range(int first_d, int last_d, std::size_t order = 30);
}
namespace parallel {
/// Independent d values run concurrently; results come back in d order.
std::vector<VerificationReport> verify_range(int first_d, int last_d, std::size_t order = 30);
}

} // namespace covdeg
