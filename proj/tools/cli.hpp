#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace uhfkron::cli {

/// Runs one invocation. `args` excludes the program name. Results and errors are
/// written to `out` as a single line of JSON; the return value is the exit code:
/// 0 success, 1 a check suite reported failures, 2 invalid input, 3 resource guard
/// exceeded, 4 internal consistency failure, 64 usage error.
int cli_run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace uhfkron::cli
