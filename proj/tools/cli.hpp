#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tgraph::cli {

enum ExitCode : int { ok = 0, mismatch = 1, usage = 2, non_convergence = 3 };

/// Runs one command line (without the program name). Standard output is
/// buffered and written only when the command completes; failures leave a
/// single diagnostic line on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tgraph::cli
