#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spikesweep {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_config = 2, exit_runtime = 3 };

/// Command-line entry point; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace spikesweep
