#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grassmann::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name) and returns the exit
/// code: 0 success, 1 domain error, 2 parse or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grassmann::cli
