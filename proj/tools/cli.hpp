#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flatmod::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
};

/// Runs one invocation. `args` excludes the program name. Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flatmod::cli
