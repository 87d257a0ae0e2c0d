#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hassecount::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kDomain = 3;
inline constexpr int kInternal = 4;  // also: selftest or table1 check failed

std::string version();

// Runs one invocation; stdout data goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hassecount::cli
