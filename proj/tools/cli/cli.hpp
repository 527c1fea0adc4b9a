#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diraccs::cli {

enum ExitCode : int { ok = 0, numeric_failure = 1, usage_error = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diraccs::cli
