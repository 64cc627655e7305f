#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ontomap {

// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,     // parse errors, malformed input
  kExitIo = 2,          // unreadable input, unwritable output
  kExitViolations = 3,  // reason found violations
  kExitEmptyGraph = 4,
  kExitEmptyCorpus = 5,
  kExitTooManyCliques = 6,
  kExitUsage = 64,
};

// Runs the tool on `args` (without the program name), writing normal output
// to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ontomap
