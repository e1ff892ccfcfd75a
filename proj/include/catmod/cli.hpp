#pragma once

// Command-line front end: classify, census, density, verify.
//
// Exit codes: 0 success, 1 verification mismatches, 2 usage or guard errors.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "catmod/natural.hpp"

namespace catmod::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Largest accepted range end / N for any subcommand.
inline constexpr std::uint64_t kMaxSupported = std::uint64_t{1} << 62;

/// Decimal or "base^exp" (e.g. "10^6", "2^14"). Throws std::invalid_argument.
Natural parse_natural(std::string_view text);

struct HalfOpenRange {
    Natural begin;
    Natural end;
};

/// "a..b" with a < b. Throws std::invalid_argument.
HalfOpenRange parse_range(std::string_view text);

/// Comma-separated list of N, or "pow2:a..b" / "pow3:a..b" (exponents in
/// [a, b)). Throws std::invalid_argument.
std::vector<Natural> parse_n_values(std::string_view text);

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catmod::cli
