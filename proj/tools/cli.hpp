#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logzeta::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable that overrides the default working precision (bits).
inline constexpr const char* kPrecisionEnv = "LOGZETA_PRECISION";

/// Runs one command line (without the program name). Reports go to `out`
/// unless --output is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logzeta::cli
