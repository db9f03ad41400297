#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zdt::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,    // internal failure or resource limit
  kInvalid = 2,     // invalid input
  kInfeasible = 3,  // not enforceable / no feasible phi
  kVerifyFailed = 4,
};

// Runs `zdt <args...>` (args excludes the program name). Artifacts without an
// --out path go to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zdt::cli
