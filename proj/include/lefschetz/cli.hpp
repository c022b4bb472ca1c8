#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lefschetz {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 1,       // unreadable file, malformed JSON, bad flags
    kExitStructural = 2,  // schema or dimension violation
    kExitObstruction = 3, // H_1 action fails the realizability check
    kExitInternal = 4,    // independent computation paths disagree
};

/// Runs the tool on `args` (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lefschetz
