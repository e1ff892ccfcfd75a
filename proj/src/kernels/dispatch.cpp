#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "kernels_internal.hpp"

namespace catmod::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(CATMOD_HAVE_AVX2)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const KernelSet* find_kernel(std::string_view name) {
    for (const KernelSet* k : available())
        if (k->name == name) return k;
    return nullptr;
}

const KernelSet* initial_kernel() {
    if (const char* forced = std::getenv("CATMOD_KERNEL"); forced != nullptr && *forced != '\0') {
        if (const KernelSet* k = find_kernel(forced)) return k;
        throw std::invalid_argument(std::string("CATMOD_KERNEL names an unavailable kernel: ") + forced);
    }
    return available().back();
}

std::atomic<const KernelSet*>& active_slot() {
    static std::atomic<const KernelSet*> slot{initial_kernel()};
    return slot;
}

void require_range(std::uint64_t first, std::uint64_t count) {
    // n + 1 must stay representable for every n in the range.
    if (count > std::numeric_limits<std::uint64_t>::max() - first)
        throw std::overflow_error("kernel range end exceeds 64-bit width");
}

template <typename Histogram, typename Tally>
Histogram parallel_histogram(std::uint64_t first, std::uint64_t count, unsigned threads, Tally tally) {
    require_range(first, count);
    threads = std::max(1u, threads);
    if (threads == 1 || count < threads) {
        Histogram hist{};
        tally(first, count, hist);
        return hist;
    }
    std::vector<Histogram> partial(threads, Histogram{});
    std::vector<std::thread> workers;
    workers.reserve(threads);
    const std::uint64_t chunk = count / threads;
    for (unsigned w = 0; w < threads; ++w) {
        const std::uint64_t begin = first + chunk * w;
        const std::uint64_t size = (w + 1 == threads) ? count - chunk * w : chunk;
        workers.emplace_back([&, w, begin, size] { tally(begin, size, partial[w]); });
    }
    for (auto& t : workers) t.join();
    Histogram total{};
    for (const auto& p : partial)
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += p[i];
    return total;
}

}  // namespace

const KernelSet& scalar() { return detail::kScalarKernels; }

const KernelSet* avx2() {
#if defined(CATMOD_HAVE_AVX2)
    static const bool supported = cpu_has_avx2();
    return supported ? &detail::kAvx2Kernels : nullptr;
#else
    return nullptr;
#endif
}

std::vector<const KernelSet*> available() {
    std::vector<const KernelSet*> out{&scalar()};
    if (const KernelSet* k = avx2()) out.push_back(k);
    return out;
}

const KernelSet& active() { return *active_slot().load(std::memory_order_acquire); }

void select(std::string_view name) {
    const KernelSet* k = find_kernel(name);
    if (k == nullptr) throw std::invalid_argument("unknown or unavailable kernel: " + std::string(name));
    active_slot().store(k, std::memory_order_release);
}

void fill_valuations(std::uint64_t first, std::span<std::uint8_t> out) {
    require_range(first, out.size());
    active().fill_valuations(first, out);
}

void fill_mod3(std::uint64_t first, std::span<std::uint8_t> out) {
    require_range(first, out.size());
    active().fill_mod3(first, out);
}

void tally_valuations(std::uint64_t first, std::uint64_t count, ValuationHistogram& hist) {
    require_range(first, count);
    active().tally_valuations(first, count, hist);
}

void tally_mod3(std::uint64_t first, std::uint64_t count, Mod3Histogram& hist) {
    require_range(first, count);
    active().tally_mod3(first, count, hist);
}

ValuationHistogram parallel_valuation_histogram(std::uint64_t first, std::uint64_t count, unsigned threads) {
    const KernelSet& k = active();
    return parallel_histogram<ValuationHistogram>(first, count, threads, k.tally_valuations);
}

Mod3Histogram parallel_mod3_histogram(std::uint64_t first, std::uint64_t count, unsigned threads) {
    const KernelSet& k = active();
    return parallel_histogram<Mod3Histogram>(first, count, threads, k.tally_mod3);
}

}  // namespace catmod::kernels
