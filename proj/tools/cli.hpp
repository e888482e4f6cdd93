#ifndef LOGMONOID_TOOLS_CLI_HPP
#define LOGMONOID_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace logmonoid::cli {

// Runs one command; args excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logmonoid::cli

#endif
