#ifndef TRUEMPER_CLI_HPP
#define TRUEMPER_CLI_HPP

#include <ostream>

namespace truemper {

enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitUsage = 2,
    kExitParse = 3,
    kExitOracleSize = 4,
    kExitDisagreement = 5,
};

/// Model and exhaustive oracles refuse larger graphs unless forced.
inline constexpr int kSmallOracleLimit = 14;
inline constexpr int kSeparatorOracleLimit = 20;

/// Entry point of the command-line tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace truemper

#endif  // TRUEMPER_CLI_HPP
