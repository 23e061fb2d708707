#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace dimod {

// Parses the argument list, runs one subcommand, and writes the report to
// `out` (JSON, or DOT for `explore --dot`).  Returns the process exit status:
// 0 success, 1 rejected input or unsatisfiable request, 2 invariant violation.
// Every failure emits a JSON diagnostic naming the error code.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace dimod
