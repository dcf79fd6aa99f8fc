#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace riocalc {

/// Runs one CLI invocation (args[0] is the program name, argv-style) and
/// writes to the given streams.  Exit codes: 0 success, 1 a check failed,
/// 2 usage or expression error.
int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace riocalc
