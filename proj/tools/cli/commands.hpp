#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weightsys::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kBound = 3 };

// Runs the command line given without the program name. Cache location comes from
// --cache, then the WEIGHTSYS_CACHE environment variable; --no-cache disables it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weightsys::cli
