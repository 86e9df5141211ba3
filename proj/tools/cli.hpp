#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace topochar::cli {

enum ExitCode { kPass = 0, kFail = 1, kResource = 2, kInput = 3 };

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace topochar::cli
