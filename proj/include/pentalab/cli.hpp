#ifndef PENTALAB_CLI_HPP
#define PENTALAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pentalab::cli {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitIo = 4;

/// Runs `pentalab <subcommand> ...`; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pentalab::cli

#endif  // PENTALAB_CLI_HPP
