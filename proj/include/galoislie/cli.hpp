#ifndef GALOISLIE_CLI_HPP
#define GALOISLIE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace galoislie {

/// Exit codes shared by every subcommand.
enum ExitCode : int { Success = 0, Refuted = 1, InputError = 2, Undecided = 3 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace galoislie

#endif
