#pragma once

#include <ostream>

namespace qrg {

/// Exit codes of the qrgroups tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 2,
  kExitResource = 3,
  kExitUsage = 4,
};

/// Runs the qrgroups command line; JSON goes to `out` (or the --output file),
/// the human-readable report table to `err` unless --output is set.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qrg
