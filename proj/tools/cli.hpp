#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conjugacy::cli {

/// Runs one CLI command. args excludes the program name. Exit code 0 means
/// conjugate / success, 1 means not conjugate, 2 means a usage, parse or
/// limit error (reported as one line on err).
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace conjugacy::cli
