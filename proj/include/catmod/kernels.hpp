#pragma once

// Batch kernels over contiguous runs of n: 2-adic valuation of C_n and
// C_n mod 3, computed per element from the digits of n+1.
//
// Every variant must produce output identical to the scalar reference. The
// active variant is chosen once at first use: the best one the CPU supports,
// unless the CATMOD_KERNEL environment variable names another.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace catmod::kernels {

// ω₂(C_n) <= 63 for every n < 2^64 - 1.
inline constexpr std::size_t kValuationBins = 64;

using ValuationHistogram = std::array<std::uint64_t, kValuationBins>;
using Mod3Histogram = std::array<std::uint64_t, 3>;

/// Kernel table. Range arguments describe n ∈ [first, first + out.size()) or
/// [first, first + count); callers guarantee first + count < 2^64.
/// Tally functions add into the histogram rather than overwrite it.
struct KernelSet {
    std::string_view name;
    void (*fill_valuations)(std::uint64_t first, std::span<std::uint8_t> out);
    void (*fill_mod3)(std::uint64_t first, std::span<std::uint8_t> out);
    void (*tally_valuations)(std::uint64_t first, std::uint64_t count, ValuationHistogram& hist);
    void (*tally_mod3)(std::uint64_t first, std::uint64_t count, Mod3Histogram& hist);
};

const KernelSet& scalar();

/// nullptr when not compiled in or when the running CPU lacks AVX2.
const KernelSet* avx2();

/// Every variant usable on this machine, scalar first.
std::vector<const KernelSet*> available();

const KernelSet& active();

/// Switches the active variant by name; throws std::invalid_argument if the
/// name is unknown or unavailable here.
void select(std::string_view name);

// Range-checked entry points through the active kernel.
void fill_valuations(std::uint64_t first, std::span<std::uint8_t> out);
void fill_mod3(std::uint64_t first, std::span<std::uint8_t> out);
void tally_valuations(std::uint64_t first, std::uint64_t count, ValuationHistogram& hist);
void tally_mod3(std::uint64_t first, std::uint64_t count, Mod3Histogram& hist);

/// Same tallies, split into disjoint sub-ranges over `threads` workers and
/// merged by addition. Results do not depend on the thread count.
ValuationHistogram parallel_valuation_histogram(std::uint64_t first, std::uint64_t count,
                                                unsigned threads);
Mod3Histogram parallel_mod3_histogram(std::uint64_t first, std::uint64_t count, unsigned threads);

}  // namespace catmod::kernels
