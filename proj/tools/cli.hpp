#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridups::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kIoError = 2,
  kGuardRefusal = 3,
  kEngineDefect = 4,
};

// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gridups::cli
