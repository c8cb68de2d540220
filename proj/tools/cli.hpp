#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cunningham::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kCapExceeded = 3 };

// Runs the hgs command line; args excludes the program name. Reports go to
// out, progress and errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cunningham::cli
