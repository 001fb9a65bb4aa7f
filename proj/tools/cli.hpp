#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polydisc::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,         // internal error or uncertifiable numerics
  kDomainError = 2,     // bad input, parse errors included
  kNoAnswer = 3,        // inconclusive or not found within the configured bounds
};

/// Runs one command. args[0] is the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polydisc::cli
