#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace configlab
{
    /// Exit codes of the command-line tool.
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_violation = 1,
        exit_usage = 2
    };

    /// Runs one command line (args excludes the program name), writing to out
    /// and err, and returns the process exit code.
    [[nodiscard]] auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
