#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dgenv {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,     // validation or a check failed, or the request is impossible
  kExitParse = 2,      // input or argument parse error
  kExitNotClosed = 3,  // closure without --complete found nonzero compositions
};

/// Runs the tool on args (without the program name).  Results go to out,
/// diagnostics to err; out stays empty on parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dgenv
