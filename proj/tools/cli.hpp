#pragma once

#include <iosfwd>

namespace gossip_age::cli {

/// Exit codes of cli_main.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;

/// Runs one `gossip-age <subcommand> ...` invocation. CSV goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gossip_age::cli
