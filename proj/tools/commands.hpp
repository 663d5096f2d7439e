#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tempered::cli {

enum ExitCode : int { exit_ok = 0, exit_fail = 1, exit_usage = 2 };

// Parses argv, runs the selected command and writes its report to `out`
// (or to --out). Diagnostics go to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Thread count used when --threads is not given: TEMPERED_THREADS, else 1.
unsigned default_threads();

}  // namespace tempered::cli
