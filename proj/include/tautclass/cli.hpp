#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tautclass {

enum ExitCode : int {
  exit_pass = 0,
  exit_property_failure = 1,
  exit_usage = 2,
  exit_invalid_representation = 3,
  exit_resampling = 4,
};

/// Runs the command line `args` (program name excluded). Reports go to `out` only on
/// completion; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tautclass
