#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fermatlab::cli {

enum ExitCode : int { kSuccess = 0, kNotFactored = 1, kInvalidInput = 2 };

/// Runs one command line; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fermatlab::cli
