#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace turanlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 ok, 1 a verification check failed, 2 usage or input
/// error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace turanlab
