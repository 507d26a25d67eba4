#ifndef LIEDEFORM_CLI_HPP
#define LIEDEFORM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace liedeform::cli {

enum ExitCode : int {
  ok = 0,
  internal_error = 1,
  bad_input = 2,      // usage or schema violation
  inadmissible = 3,   // well-formed but fails a mathematical precondition
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace liedeform::cli

#endif
