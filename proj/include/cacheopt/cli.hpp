#ifndef CACHEOPT_CLI_HPP
#define CACHEOPT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

// Command-line driver, separated from main() so tests can run commands
// in-process against string streams.

namespace cacheopt {

// `args` excludes the program name. Exit codes: 0 success, 1 parse or
// usage error, 2 infeasible workload (V below the file count), 3 oracle
// enumeration limit exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cacheopt

#endif
