#pragma once

#include <ostream>

namespace mipoly {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitPass = 0,
  kExitFailure = 1,
  kExitInvalidInput = 2,
  kExitInternal = 3,
};

/// Entry point of the `mipoly` tool, callable from tests.
/// Subcommands: construct, verify, zeros, table.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mipoly
