#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mrank::cli {

/// Exit codes of the markovrank tool.
enum ExitCode : int { ok = 0, input_error = 1, multiplicity = 2 };

/// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mrank::cli
