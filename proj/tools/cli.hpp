#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qeuler::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kVerifyFailed = 2;

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qeuler::cli
