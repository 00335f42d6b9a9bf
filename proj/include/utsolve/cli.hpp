#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace utsolve::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kUnsupported = 2,
  kNotRegular = 3,
  kNotSolution = 4,
  kSolverFailure = 5,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace utsolve::cli
