#include "kernels_internal.hpp"

#if defined(CATMOD_HAVE_AVX2)

#include <immintrin.h>

#include <algorithm>
#include <array>
#include <limits>

#define CATMOD_AVX2 __attribute__((target("avx2")))

namespace catmod::kernels::detail {

namespace {

constexpr std::size_t kLanes64 = 4;
constexpr std::size_t kLanes32 = 8;

// The mod-3 kernel runs on 32-bit lanes; elements whose n+1 needs more bits
// go through the scalar reference.
constexpr std::uint64_t kMod3VectorLimit = std::numeric_limits<std::uint32_t>::max();

CATMOD_AVX2 inline __m256i popcount_epi64(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

// Four consecutive valuations starting at n, as 64-bit lanes.
CATMOD_AVX2 inline __m256i valuations4(__m256i n) {
    const __m256i one = _mm256_set1_epi64x(1);
    const __m256i m = _mm256_add_epi64(n, one);
    const __m256i lowest = _mm256_and_si256(m, _mm256_sub_epi64(_mm256_setzero_si256(), m));
    const __m256i trailing = popcount_epi64(_mm256_sub_epi64(lowest, one));
    const __m256i odd_part = _mm256_srlv_epi64(m, trailing);
    return popcount_epi64(_mm256_srli_epi64(odd_part, 1));
}

CATMOD_AVX2 inline __m256i div3_epu32(__m256i v) {
    const __m256i magic = _mm256_set1_epi32(static_cast<int>(0xAAAAAAABu));
    const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(v, magic), 33);
    const __m256i odd = _mm256_slli_epi64(
        _mm256_srli_epi64(_mm256_mul_epu32(_mm256_srli_epi64(v, 32), magic), 33), 32);
    return _mm256_blend_epi32(even, odd, 0xAA);
}

// Eight residues C_n mod 3 for n+1 held in 32-bit lanes.
CATMOD_AVX2 inline __m256i mod3x8(__m256i shifted) {
    const __m256i one = _mm256_set1_epi32(1);
    const __m256i two = _mm256_set1_epi32(2);
    __m256i v = div3_epu32(shifted);
    __m256i ones = _mm256_setzero_si256();
    __m256i has_two = _mm256_setzero_si256();
    while (!_mm256_testz_si256(v, v)) {
        const __m256i q = div3_epu32(v);
        const __m256i digit = _mm256_sub_epi32(v, _mm256_mullo_epi32(q, _mm256_set1_epi32(3)));
        ones = _mm256_add_epi32(ones, _mm256_and_si256(_mm256_cmpeq_epi32(digit, one), one));
        has_two = _mm256_or_si256(has_two, _mm256_cmpeq_epi32(digit, two));
        v = q;
    }
    const __m256i nonzero = _mm256_add_epi32(one, _mm256_and_si256(ones, one));
    return _mm256_andnot_si256(has_two, nonzero);
}

CATMOD_AVX2 inline __m256i iota32(std::uint64_t first) {
    return _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(first))),
                            _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7));
}

CATMOD_AVX2 void fill_valuations_avx2(std::uint64_t first, std::span<std::uint8_t> out) {
    const std::size_t size = out.size();
    std::size_t i = 0;
    alignas(32) std::array<std::uint64_t, kLanes64> lanes;
    for (; i + kLanes64 <= size; i += kLanes64) {
        const std::uint64_t n = first + i;
        const __m256i v = valuations4(_mm256_setr_epi64x(static_cast<long long>(n),
                                                         static_cast<long long>(n + 1),
                                                         static_cast<long long>(n + 2),
                                                         static_cast<long long>(n + 3)));
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), v);
        for (std::size_t l = 0; l < kLanes64; ++l) out[i + l] = static_cast<std::uint8_t>(lanes[l]);
    }
    for (; i < size; ++i) out[i] = valuation_of(first + i);
}

CATMOD_AVX2 void tally_valuations_avx2(std::uint64_t first, std::uint64_t count, ValuationHistogram& hist) {
    std::uint64_t i = 0;
    alignas(32) std::array<std::uint64_t, kLanes64> lanes;
    const __m256i step = _mm256_set1_epi64x(kLanes64);
    __m256i n = _mm256_setr_epi64x(static_cast<long long>(first), static_cast<long long>(first + 1),
                                   static_cast<long long>(first + 2), static_cast<long long>(first + 3));
    for (; i + kLanes64 <= count; i += kLanes64) {
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), valuations4(n));
        ++hist[lanes[0]];
        ++hist[lanes[1]];
        ++hist[lanes[2]];
        ++hist[lanes[3]];
        n = _mm256_add_epi64(n, step);
    }
    for (; i < count; ++i) ++hist[valuation_of(first + i)];
}

CATMOD_AVX2 void fill_mod3_avx2(std::uint64_t first, std::span<std::uint8_t> out) {
    const std::size_t size = out.size();
    std::size_t i = 0;
    alignas(32) std::array<std::uint32_t, kLanes32> lanes;
    // Vector path while every n+1 in the block fits in 32 bits.
    for (; i + kLanes32 <= size && first + i + kLanes32 <= kMod3VectorLimit; i += kLanes32) {
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), mod3x8(iota32(first + i + 1)));
        for (std::size_t l = 0; l < kLanes32; ++l) out[i + l] = static_cast<std::uint8_t>(lanes[l]);
    }
    for (; i < size; ++i) out[i] = mod3_of(first + i);
}

CATMOD_AVX2 void tally_mod3_avx2(std::uint64_t first, std::uint64_t count, Mod3Histogram& hist) {
    std::uint64_t i = 0;
    const __m256i one = _mm256_set1_epi32(1);
    const __m256i two = _mm256_set1_epi32(2);
    // Per-lane counters; flushed before they could overflow 32 bits.
    constexpr std::uint64_t kFlushEvery = std::uint64_t{1} << 30;
    while (i + kLanes32 <= count && first + i + kLanes32 <= kMod3VectorLimit) {
        __m256i ones = _mm256_setzero_si256();
        __m256i twos = _mm256_setzero_si256();
        std::uint64_t block = 0;
        for (; block < kFlushEvery && i + kLanes32 <= count && first + i + kLanes32 <= kMod3VectorLimit;
             block += kLanes32, i += kLanes32) {
            const __m256i r = mod3x8(iota32(first + i + 1));
            ones = _mm256_sub_epi32(ones, _mm256_cmpeq_epi32(r, one));
            twos = _mm256_sub_epi32(twos, _mm256_cmpeq_epi32(r, two));
        }
        alignas(32) std::array<std::uint32_t, kLanes32> a;
        alignas(32) std::array<std::uint32_t, kLanes32> b;
        _mm256_store_si256(reinterpret_cast<__m256i*>(a.data()), ones);
        _mm256_store_si256(reinterpret_cast<__m256i*>(b.data()), twos);
        std::uint64_t n1 = 0;
        std::uint64_t n2 = 0;
        for (std::size_t l = 0; l < kLanes32; ++l) {
            n1 += a[l];
            n2 += b[l];
        }
        hist[1] += n1;
        hist[2] += n2;
        hist[0] += block - n1 - n2;
    }
    for (; i < count; ++i) ++hist[mod3_of(first + i)];
}

}  // namespace

const KernelSet kAvx2Kernels{
    "avx2",
    &fill_valuations_avx2,
    &fill_mod3_avx2,
    &tally_valuations_avx2,
    &tally_mod3_avx2,
};

}  // namespace catmod::kernels::detail

#endif  // CATMOD_HAVE_AVX2
