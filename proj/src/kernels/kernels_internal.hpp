#pragma once

#include <bit>
#include <cstdint>

#include "catmod/kernels.hpp"

namespace catmod::kernels::detail {

// Scalar reference for one element: α(n) = (CF₂(n+1) - 1)/2, valuation = d(α).
inline std::uint8_t valuation_of(std::uint64_t n) {
    const std::uint64_t m = n + 1;
    const std::uint64_t alpha = (m >> std::countr_zero(m)) >> 1;
    return static_cast<std::uint8_t>(std::popcount(alpha));
}

// Scalar reference for one element of C_n mod 3, from the base-3 digits of n+1.
inline std::uint8_t mod3_of(std::uint64_t n) {
    unsigned ones = 0;
    for (std::uint64_t v = (n + 1) / 3; v != 0; v /= 3) {
        const auto d = v % 3;
        if (d == 2) return 0;
        ones += (d == 1);
    }
    return (ones & 1u) ? 2 : 1;
}

extern const KernelSet kScalarKernels;

#if defined(CATMOD_HAVE_AVX2)
extern const KernelSet kAvx2Kernels;
#endif

}  // namespace catmod::kernels::detail
