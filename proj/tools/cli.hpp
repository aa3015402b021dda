#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hetknn::cli {

/// Exit codes of the hetknn tool.
enum ExitCode : int {
  kSuccess = 0,
  kDataError = 1,
  kUsageError = 2,
};

/// Runs the tool on `args` (args[0] is the program name). Regular output goes
/// to `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hetknn::cli
