#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kmmtc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;

/// Runs one command line (args excludes the program name). Normal output goes
/// to `out`, diagnostics to `err` as "kmmtc: error[CODE]: message".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kmmtc::cli
