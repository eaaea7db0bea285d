#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace npcli {

// Executes one command. Exit codes: 0 success, 1 math-domain error (the
// error code name goes to err), 2 command-line or grammar parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace npcli
