#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace negset::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInvalidInput = 2,
  kHalted = 3,
  kConfigError = 4,
};

/// Runs the command line `args` (program name excluded). Reports go to `out`,
/// diagnostics and timings to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace negset::cli
