#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hlbench::cli {

// Runs one command line (without the program name). The JSON report goes to
// `out` (or to --out), diagnostics and --verbose tables to `err`.
// Returns 0 on success, 1 when a checked property fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hlbench::cli
