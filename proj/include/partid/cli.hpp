#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partid {

/* Runs one CLI invocation (args exclude the program name) writing to the
 * given streams. Exit codes: 0 success, 1 verification failure, 2 usage
 * or input error. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace partid
