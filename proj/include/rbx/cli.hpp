#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rbx {

// Runs one rbx command (check, trace-element, integrals, rb, tridend,
// export). args excludes the program name. Reports go to out; errors to err.
// Exit status: 0 all verdicts pass, 1 a mathematical verdict failed,
// 2 input/usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbx
