#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prefnet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// argv excludes the program name. Reports go to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace prefnet::cli
