#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quosyn::cli {

// Routes argv to the instance and harness operations.  Returns the process
// exit code: 0 on success, 1 when a property suite reports a failure, 2 on
// usage or input errors.  `in` feeds the repl; all other commands ignore it.
int dispatch(std::vector<std::string> args, std::istream& in,
             std::ostream& out, std::ostream& err);

}  // namespace quosyn::cli
