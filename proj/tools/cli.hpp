#pragma once

#include <iosfwd>

namespace liaisonlab {

enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailed = 1,
  kExitDegenerate = 2,
  kExitUsage = 64,
};

/// Entry point of the liaisonlab tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace liaisonlab
