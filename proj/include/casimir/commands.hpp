#ifndef CASIMIR_COMMANDS_HPP
#define CASIMIR_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace casimir::cli {

/// Command-line entry point, callable in-process for tests. `args` excludes
/// the program name. Exit codes: 0 success / all checks pass, 1 a check
/// failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli

#endif
