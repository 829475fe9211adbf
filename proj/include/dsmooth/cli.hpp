#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dsmooth {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_input = 1, exit_usage = 2, exit_internal = 3 };

/// Runs the tool on `args` (program name excluded). A mathematical verdict never
/// changes the exit code; only input, usage and internal errors do.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dsmooth
