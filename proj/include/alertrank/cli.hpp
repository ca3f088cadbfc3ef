#pragma once

namespace alertrank::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_io = 1;
inline constexpr int exit_config = 2;
inline constexpr int exit_degenerate = 3;

/// Parses argv and dispatches to the rank / mine / eval subcommand.
/// Returns one of the exit_* codes above.
int run(int argc, const char* const* argv);

}  // namespace alertrank::cli
