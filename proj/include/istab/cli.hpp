#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace istab {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,       // stable / exists / success
    kExitNegative = 1, // unstable / absent
    kExitUsage = 2,    // usage, parse or precondition error
    kExitCycle = 3,
    kExitStepLimit = 4,
};

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace istab
