#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace numsg::cli {

/// Runs one command. `args` excludes the program name. Returns the process
/// exit code: 0 on success, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace numsg::cli
