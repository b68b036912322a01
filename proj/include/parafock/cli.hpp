#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parafock::cli {

enum ExitCode : int { Pass = 0, Violation = 1, Usage = 2 };

// Runs one command. `args` excludes the program name, e.g.
// {"verify-gz", "--p", "3", "--max-level", "8"}. Reports go to `out` (or to
// the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parafock::cli
