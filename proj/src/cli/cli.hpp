#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lexidim::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInputError = 1,
    kVerificationFailure = 2,
    kCapExceeded = 3,
};

// Runs one command line (args excludes the program name). Reports go to
// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lexidim::cli
