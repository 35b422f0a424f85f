#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace corrterms::cli {

// Parses and executes one command line (without the program name).
// Returns 0 on success, 2 on invalid input, 3 on an internal invariant
// violation.  All data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace corrterms::cli
