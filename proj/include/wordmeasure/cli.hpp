// Command-line front end. Exit codes: 0 success, 1 usage error,
// 2 enumeration budget exceeded, 3 selftest mismatch.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitMismatch = 3;

/// Environment variable supplying the default --budget.
inline constexpr const char* kBudgetEnv = "WORDMEASURE_BUDGET";

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wm::cli
