#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdgqc::cli {

/// Exit codes of `run`.
inline constexpr int kOk = 0;
inline constexpr int kPredicateFalse = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (args excludes the program name). Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdgqc::cli
