#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cores::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kNegative = 1,        // check: partition is not a simultaneous core
    kUsage = 2,           // bad arguments or unsatisfiable request
    kInfinite = 3,        // enumeration demanded for an infinite family
    kInternal = 4,        // violated internal invariant (cross-check mismatch)
};

/// Runs one CLI invocation. `args` excludes the program name. All regular
/// output goes to `out`, diagnostics to `err`; the return value is the
/// process exit status.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cores::cli
