#pragma once

#include <ostream>

namespace pi2 {

enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailed = 1,
  kExitInputError = 2,
  kExitResourceCap = 3,
};

/// Entry point of the `pi2` command line tool.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pi2
