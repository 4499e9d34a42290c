#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gfa {

/// Exit codes of the gfa tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitParse = 2,
  kExitDomain = 3,
  kExitAssertion = 4,
  kExitSize = 5,
};

/// Runs one gfa invocation. args excludes the program name. The report goes to
/// `out`; errors go to `err` as one line of JSON.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gfa
