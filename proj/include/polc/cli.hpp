#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polc {

enum ExitCode : int { exit_ok = 0, exit_input = 2, exit_expect = 3, exit_internal = 4 };

/// Runs one `polc` invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace polc
