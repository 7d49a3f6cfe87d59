#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace intervalkit {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_selftest_failed = 1,
    exit_parse = 2,
    exit_eval = 3,
    exit_solver = 4,
    exit_compare = 5,
};

/// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace intervalkit
