#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symlap {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitPrecondition = 3,
  kExitIdentity = 4,
  kExitViolation = 5,
};

/// Runs the command line `args` (without the program name). Graph input
/// paths of "-" read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace symlap
