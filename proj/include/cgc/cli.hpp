#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cgc {

inline constexpr const char* kVersion = "0.1.0";

/// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitGoldenMismatch = 3;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgc
