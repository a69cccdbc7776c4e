#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace prefl::cli {

inline constexpr int kPositive = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prefl::cli
