#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qlogic {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,       // bad arguments or unreadable input
  kExitValidation = 2,  // input or result failed a check
  kExitResource = 3,    // search bound or budget exhausted
};

/// Command-line entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlogic
