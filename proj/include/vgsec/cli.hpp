#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vgsec {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFailure = 3;

/// Runs the vgsec command line. `args` excludes the program name. Data goes
/// to `out`, diagnostics (including the error JSON) to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vgsec
