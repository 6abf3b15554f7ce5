#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace monocurve::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 1, kVerificationFailure = 2 };

/// Runs one command line (without the program name). Reports go to `out`
/// or to --out; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monocurve::cli
