#ifndef FOL_CLI_HPP
#define FOL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fol::cli {

// Run the command-line tool on the given arguments (program name excluded).
// Reports go to `out`, diagnostics to `err`. Returns the process exit code:
//   0 success
//   1 invalid input (unreadable file, malformed document, parse error)
//   2 profile or dimension-bound violation
//   3 declared rank contradicts the sampled rank
//   4 decomposition requested without coordinate roles
//   5 a decomposition check failed (check named on stderr)
//   6 trace completed but drift exceeded the tolerance
//   7 trace refused: singular start point
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fol::cli

#endif
