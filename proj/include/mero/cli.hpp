#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mero {

// Runs the command-line tool on `args` (without the program name), writing to
// the given streams. Returns the process exit code: 0 on success, 1 when a
// `verify` run finds a violation, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mero
