#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace borncheck {

// Entry point for the borncheck tool. `args` excludes the program name.
// Exit codes: 0 success / all checks hold, 1 violation or golden mismatch,
// 2 usage or config error, 3 valuation error, 4 resource cap exceeded.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace borncheck
