#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace charclass {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitInconclusive = 2,
    kExitCounterexample = 3,
};

/// Runs one command; args excludes the program name. Results go to out,
/// diagnostics (errors, automatic truncation choices) to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charclass
