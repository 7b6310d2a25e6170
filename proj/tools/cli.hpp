#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chartlab::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kDomainError = 1, kVerificationFailed = 2, kUsageError = 3 };

/// Runs the command line (without the program name).  `in` backs the "-" argument.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace chartlab::cli
