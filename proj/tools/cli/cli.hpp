#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sgevp/error.hpp"

namespace sgevp::cli {

enum ExitCode : int {
  kOk = 0,
  kVerdictFail = 1,
  kConfigError = 2,
  kDataError = 3,
  kNumericalError = 4,
};

int exit_code_for(Errc code);

/// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgevp::cli
