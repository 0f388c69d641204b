#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prd::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kPropertyFailure = 1,
  kParseError = 2,
  kSizeLimit = 3,
  kInternalError = 4,
};

inline constexpr const char* kVersion = "1.0.0";

/// Runs the command line `args` (without the program name). Reads stdin
/// from `in` unless --input is given; writes reports to `out` unless
/// --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace prd::cli
