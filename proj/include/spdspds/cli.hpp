#pragma once

#include <iosfwd>

namespace spdspds {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitSolved = 0,           ///< (F,F), (F,Inf) or (Inf,F)
    kExitPrimalInfeasible = 2, ///< (Phi,Inf)
    kExitPrimalUnbounded = 3,  ///< (Inf,Phi)
    kExitBothInfeasible = 4,   ///< (Phi,Phi)
    kExitNotTerminal = 5,      ///< iteration limit or cycle
    kExitUsage = 64,
    kExitParse = 65,
};

/// Entry point of the spdspds tool: solve, bench and classify subcommands.
/// Reports go to out, diagnostics and traces to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spdspds
