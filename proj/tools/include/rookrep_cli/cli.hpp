#ifndef ROOKREP_CLI_HPP
#define ROOKREP_CLI_HPP

#include <iosfwd>

namespace rookrep::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rookrep::cli

#endif  // ROOKREP_CLI_HPP
