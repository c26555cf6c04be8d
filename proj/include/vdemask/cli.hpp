#pragma once

namespace vdemask {

// Full command-line entry point (budget / mask / check subcommands).
// Returns 0 on success, 1 on usage or configuration errors, 2 when a
// protection criterion is infeasible for the scenario.
int cli_main(int argc, const char* const* argv);

}  // namespace vdemask
