#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace snr {

// Dispatches one CLI invocation (arguments without the program name).
// Returns the process exit status: 0 success (and "feasible" verdicts),
// 2 infeasible verdict from the `feasible` command, 1 any error.
// All output goes to the given streams, so tests can run in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace snr
