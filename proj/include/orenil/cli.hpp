#ifndef ORENIL_CLI_HPP
#define ORENIL_CLI_HPP

#include <ostream>

namespace orenil::cli
{

/// Exit statuses of the command-line tool.
enum ExitCode : int
{
    Success = 0,
    VerdictMismatch = 1,
    InputError = 2,
    BudgetExceeded = 3
};

/// Runs one command line. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace orenil::cli

#endif // ORENIL_CLI_HPP
