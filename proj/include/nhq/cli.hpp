#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nhq {

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_parse = 2, exit_dimension = 3, exit_other = 4 };

/// Runs one nhq command. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nhq
