#ifndef CHIPRES_CLI_HPP
#define CHIPRES_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace chipres {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when a verification fails and 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chipres

#endif
