#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slicecheck {

// Runs the command line given the arguments after the program name.
// Returns the process exit code: 0 on success, 1 for validation problems
// (bad flags, schema/label/count errors), 2 for I/O and fetch failures.
// Diagnostics go to `err` only; requested data goes to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slicecheck
