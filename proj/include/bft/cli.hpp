#ifndef BFT_CLI_HPP
#define BFT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bft {

/// Runs the command-line front end. Returns the process exit code:
/// 0 success, 1 usage error, 2 domain error (conflict, dogmatic input,
/// frame/length mismatch). Exposed as a function so tests drive it in-process.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bft

#endif  // BFT_CLI_HPP
