// Command-line front end. Exit codes: 0 success, 1 rejected input or oracle
// mismatch, 2 parse/validation/usage errors, 3 an `inconsistent` verdict.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace anticanon {

enum ExitCode : int { exit_ok = 0, exit_rejected = 1, exit_invalid = 2, exit_inconsistent = 3 };

/// `args` excludes the program name. Everything is written to `out`.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace anticanon
