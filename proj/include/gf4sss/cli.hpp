#ifndef GF4SSS_CLI_HPP
#define GF4SSS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gf4sss::cli {

// Runs one invocation. Exit status: 0 success, 2 usage error, 3 domain
// error, 4 enumeration budget exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gf4sss::cli

#endif
