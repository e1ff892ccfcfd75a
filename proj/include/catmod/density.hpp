#pragma once

// Finite-N density sweeps for {n : 2^k | C_n} and {n : 3 | C_n}, paired with
// the analytic lower bounds that drive both densities to 1.
//
// All ranges are half-open, n ∈ [0, N). Densities and bounds are exact
// rationals; rendering to decimal happens at the output boundary.

#include <cstdint>
#include <span>
#include <vector>

#include "catmod/exact.hpp"
#include "catmod/natural.hpp"

namespace catmod {

/// Default ceiling on N for density sweeps.
inline constexpr std::uint64_t kDefaultDensityMaxN = std::uint64_t{1} << 26;

struct SweepOptions {
    std::uint64_t max_n = kDefaultDensityMaxN;
    unsigned threads = 1;
};

struct Modulus {
    enum class Kind { power_of_two, three };
    Kind kind = Kind::power_of_two;
    Natural k;  // exponent for power_of_two; unused for three

    static Modulus two_to(Natural k) { return {Kind::power_of_two, k}; }
    static Modulus three() { return {Kind::three, 0u}; }

    friend bool operator==(const Modulus&, const Modulus&) = default;
};

struct DensityRow {
    Natural n_limit;                // N
    Modulus modulus;
    ExactCount divisible_count;     // #{n < N : modulus | C_n}
    Rational empirical_density;     // divisible_count / N
    Rational analytic_lower_bound;  // clamped at 0
};

/// Largest e with base^e <= N, by integer arithmetic. Throws
/// std::domain_error for N = 0 and std::invalid_argument for base < 2.
Natural floor_log(Natural n, unsigned base);

/// 1 - (1/N) Σ_{i=0}^{k-1} C(r+1, i+1), r = floor(log2 N). Not clamped; it is
/// negative for some small N. Throws std::invalid_argument for N = 0 or k = 0.
Rational lower_bound_mod2k(Natural n, Natural k);

/// 3 · 2^floor(log3 N): upper bound on the T*(01) members in [0, N].
ExactCount tstar_count_bound(Natural n);

/// max(0, 1 - tstar_count_bound(N)/N).
Rational lower_bound_mod3(Natural n);

/// One row per N, in input order. Throws std::invalid_argument for N = 0 or
/// k = 0, std::out_of_range when some N exceeds options.max_n.
std::vector<DensityRow> density_sweep_mod2k(std::span<const Natural> n_values, Natural k,
                                            const SweepOptions& options = {});

std::vector<DensityRow> density_sweep_mod3(std::span<const Natural> n_values,
                                           const SweepOptions& options = {});

}  // namespace catmod
