#include <bit>

#include "kernels_internal.hpp"

namespace catmod::kernels::detail {

namespace {

void fill_valuations_scalar(std::uint64_t first, std::span<std::uint8_t> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = valuation_of(first + i);
}

void fill_mod3_scalar(std::uint64_t first, std::span<std::uint8_t> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod3_of(first + i);
}

void tally_valuations_scalar(std::uint64_t first, std::uint64_t count, ValuationHistogram& hist) {
    for (std::uint64_t i = 0; i < count; ++i) ++hist[valuation_of(first + i)];
}

void tally_mod3_scalar(std::uint64_t first, std::uint64_t count, Mod3Histogram& hist) {
    for (std::uint64_t i = 0; i < count; ++i) ++hist[mod3_of(first + i)];
}

}  // namespace

const KernelSet kScalarKernels{
    "scalar",
    &fill_valuations_scalar,
    &fill_mod3_scalar,
    &tally_valuations_scalar,
    &tally_mod3_scalar,
};

}  // namespace catmod::kernels::detail
