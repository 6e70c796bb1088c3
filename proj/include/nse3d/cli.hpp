#pragma once

#include <ostream>

namespace nse3d {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 1,
  kExitBoundViolated = 2,
  kExitNonconvergence = 3,
  kExitInfeasible = 4,
};

/// Parses argv and dispatches to a subcommand; output goes to out/err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nse3d
