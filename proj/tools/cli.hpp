#pragma once

#include <ostream>
#include <span>
#include <string>

namespace skewhopf::cli {

/// Exit codes: 0 success, 1 invalid input, 2 computation error,
/// 3 a requested check failed.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kComputationError = 2,
  kCheckFailed = 3,
};

/// Runs one verb. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace skewhopf::cli
