#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stc {

/// Process exit codes of the maxstc tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_invalid = 1,       // verify: labeling violates strong triadic closure
  exit_parse_error = 2,   // unreadable input or bad arguments
  exit_wrong_class = 3,   // forced solver does not apply
  exit_unsupported = 4,   // too large for the oracle and in no known class
  exit_internal = 5,
};

/// Runs the command line `args` (args[0] is the program name).
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace stc
