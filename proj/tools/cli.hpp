#pragma once

#include <ostream>
#include <string>
#include <string_view>

namespace eigencount::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1; // I/O, usage, unknown suite
inline constexpr int exit_admissibility = 2;
inline constexpr int exit_parse = 3;
inline constexpr int exit_verify = 4;

/// Runs one `eigencount` command line. Reports go to `out`, diagnostics to
/// `err`; the return value is the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "fnv1a64:" followed by 16 hex digits.
std::string input_digest(std::string_view bytes);

} // namespace eigencount::cli
