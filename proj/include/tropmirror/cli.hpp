#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropmirror {

enum ExitCode : int { kSuccess = 0, kMismatch = 1, kUsage = 2, kInvariant = 3 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropmirror
