#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fermiwell::app {

//! Process exit codes of the fermiwell tool.
enum ExitCode : int
{
    kSuccess = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
    kNumericalFailure = 3,
};

/*!
 * Run the command line `fermiwell <command> [flags]`. `args` excludes the
 * program name. Records go to `out` (or to the --out file), diagnostics to
 * `err`. Returns the process exit code.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fermiwell::app
