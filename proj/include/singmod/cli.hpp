#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace singmod {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_congruence_failure = 1,
    exit_usage = 2,
    exit_internal = 3,
};

/// Runs the command line `args` (program name excluded), writing reports
/// to `out` and diagnostics to `err`.
int run_cli(std::vector<std::string> const & args, std::ostream & out, std::ostream & err);

} // namespace singmod
