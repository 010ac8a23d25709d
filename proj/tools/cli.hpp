#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sixflow::cli {

/// Exit codes besides the pipeline's ErrorCode values.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;

/// Runs one command line (args excludes the program name). Machine output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sixflow::cli
