#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace antisym::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2, kCapacityError = 3 };

/// Runs one command line (without the program name). Results go to `out`;
/// error objects are written to `out` as JSON and explained on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antisym::cli
