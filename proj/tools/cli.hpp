#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace covdeg::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kVerificationFailed = 2,
  kReconstructionFailed = 3,
};

/// Runs one command line. `args` excludes the program name. Results go to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace covdeg::cli
