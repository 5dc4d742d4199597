#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nbihom {

// Dispatches one command line (without the program name) and writes reports to
// out. Returns the process exit code: 0 all checks passed or the construction
// succeeded, 1 a check or construction hypothesis failed, 2 usage or parse
// error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nbihom
