#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jumpdet::cli {

/// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitPrecision = 2;

/// Fixed CSV header of the detect and table commands.
inline constexpr const char* kEstimateHeader =
    "x,n,method,r,alpha,estimate,true_jump,abs_error,remainder_bound,warning,diverging";

/// Runs the command line `args` (args[0] is the program name). Results go to
/// the --out file or `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jumpdet::cli
