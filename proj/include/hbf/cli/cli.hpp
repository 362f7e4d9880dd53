#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hbf::cli {

/// Exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kCertificationFailure = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (without the program name). Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbf::cli
