#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rbell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Name of the environment variable holding the default output format.
inline constexpr const char* kFormatEnv = "RBELL_FORMAT";

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbell::cli
