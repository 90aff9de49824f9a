#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affine_fock::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kParseError = 2,
  kConstraint = 3,
  kWindowOverflow = 4,
};

// Runs the command line (args excludes the program name). Never throws; all
// failures are mapped to the exit codes above with a message on err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affine_fock::cli
