#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nrshift::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kValidation = 3 };

/// Runs one command line (without the program name). Everything the command
/// prints goes to `out` / `err`; files are written only where options say so.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nrshift::cli
