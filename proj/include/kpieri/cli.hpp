#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kpieri::cli {

enum ExitCode : int {
  ok = 0,
  bad_input = 1,
  verification_failed = 2,
  internal_error = 3,
};

/// Runs one command line (without the program name). The default ambient
/// bound may also come from the KPIERI_AMBIENT environment variable.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kpieri::cli
