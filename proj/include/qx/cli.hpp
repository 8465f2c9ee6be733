#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qx::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

/// Runs the command line (args exclude the program name). Reports go to out,
/// diagnostics to err. Returns 0 on success, 1 on usage errors, 2 on
/// verification failures and contradictions.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qx::cli
