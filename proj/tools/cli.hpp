#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace otto::cli {

enum ExitCode : int {
    kOk = 0,
    kArgumentError = 2,
    kNumericalError = 3,
    kBracketError = 4,
};

/// Runs one invocation. Data goes to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace otto::cli
