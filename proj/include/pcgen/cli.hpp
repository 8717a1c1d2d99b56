#ifndef PCGEN_CLI_HPP
#define PCGEN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pcgen::cli {

/// Exit codes, stable across releases.
enum ExitCode : int {
    kOk = 0,
    kParseError = 1,     // malformed input file (message names the line)
    kNotGenerating = 2,  // the supplied entries do not determine the matrix
    kGuardError = 3,     // argument outside a documented guard range
    kUsageError = 64,    // bad command line
};

/// Dispatch one invocation. `args` excludes the program name. Primary
/// output (CSV matrices, edge-set streams, tables) goes to `out`;
/// summaries and errors go to `err`, keeping `out` machine-parseable.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcgen::cli

#endif  // PCGEN_CLI_HPP
