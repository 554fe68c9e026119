#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace folia::cli {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kUnknown = 3 };

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace folia::cli
