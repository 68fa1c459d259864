#pragma once

#include <iosfwd>

namespace dtc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Default worker count when --workers is absent.
inline constexpr const char* kWorkersEnv = "DTCODES_WORKERS";

/// Runs the dtcodes command line. Machine output goes to `out`, progress and
/// diagnostics to `err`. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dtc::cli
