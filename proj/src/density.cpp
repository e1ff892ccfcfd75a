#include "catmod/density.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "catmod/census.hpp"
#include "catmod/kernels.hpp"

namespace catmod {

namespace {

void validate_limits(std::span<const Natural> n_values, const SweepOptions& options) {
    for (Natural n : n_values) {
        if (n.value() == 0) throw std::invalid_argument("N must be at least 1");
        if (n.value() > options.max_n)
            throw std::out_of_range("density guard: N = " + std::to_string(n.value()) + " exceeds " +
                                    std::to_string(options.max_n));
    }
}

Rational clamp_nonnegative(Rational r) { return sgn(r) < 0 ? Rational(0) : r; }

Rational ratio(const ExactCount& count, Natural n) {
    Rational r(count, exact_count(n.value()));
    r.canonicalize();
    return r;
}

// Visits the limits in ascending order, handing `advance` each new [lo, hi)
// stretch so prefix tallies are accumulated once.
template <typename Advance, typename Emit>
void sweep_ascending(std::span<const Natural> n_values, Advance advance, Emit emit) {
    std::vector<std::size_t> order(n_values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return n_values[a] < n_values[b]; });
    std::uint64_t reached = 0;
    for (std::size_t idx : order) {
        const std::uint64_t target = n_values[idx].value();
        advance(reached, target);
        reached = target;
        emit(idx);
    }
}

}  // namespace

Natural floor_log(Natural n, unsigned base) {
    if (base < 2) throw std::invalid_argument("floor_log base must be at least 2");
    if (n.value() == 0) throw std::domain_error("floor_log is undefined at 0");
    std::uint64_t e = 0;
    std::uint64_t power = 1;
    // power <= n / base  <=>  power * base <= n, without overflow.
    while (power <= n.value() / base) {
        power *= base;
        ++e;
    }
    return e;
}

Rational lower_bound_mod2k(Natural n, Natural k) {
    if (n.value() == 0) throw std::invalid_argument("N must be at least 1");
    if (k.value() == 0) throw std::invalid_argument("k must be at least 1");
    const Natural r_plus_1 = floor_log(n, 2) + Natural{1u};
    ExactCount sum = 0;
    for (std::uint64_t i = 0; i < k.value() && i < r_plus_1.value(); ++i) sum += binomial(r_plus_1, i + 1);
    return Rational(1) - ratio(sum, n);
}

ExactCount tstar_count_bound(Natural n) {
    ExactCount bound = 3;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), floor_log(n, 3).value());
    return bound;
}

Rational lower_bound_mod3(Natural n) { return clamp_nonnegative(Rational(1) - ratio(tstar_count_bound(n), n)); }

std::vector<DensityRow> density_sweep_mod2k(std::span<const Natural> n_values, Natural k,
                                            const SweepOptions& options) {
    if (k.value() == 0) throw std::invalid_argument("k must be at least 1");
    validate_limits(n_values, options);

    std::vector<DensityRow> rows(n_values.size());
    kernels::ValuationHistogram hist{};
    sweep_ascending(
        n_values,
        [&](std::uint64_t lo, std::uint64_t hi) {
            if (hi <= lo) return;
            const auto part = kernels::parallel_valuation_histogram(lo, hi - lo, options.threads);
            for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += part[i];
        },
        [&](std::size_t idx) {
            const Natural n = n_values[idx];
            std::uint64_t divisible = 0;
            for (std::size_t v = std::min<std::uint64_t>(k.value(), hist.size()); v < hist.size(); ++v)
                divisible += hist[v];
            DensityRow& row = rows[idx];
            row.n_limit = n;
            row.modulus = Modulus::two_to(k);
            row.divisible_count = exact_count(divisible);
            row.empirical_density = ratio(row.divisible_count, n);
            row.analytic_lower_bound = clamp_nonnegative(lower_bound_mod2k(n, k));
        });
    return rows;
}

std::vector<DensityRow> density_sweep_mod3(std::span<const Natural> n_values, const SweepOptions& options) {
    validate_limits(n_values, options);

    std::vector<DensityRow> rows(n_values.size());
    kernels::Mod3Histogram hist{};
    sweep_ascending(
        n_values,
        [&](std::uint64_t lo, std::uint64_t hi) {
            if (hi <= lo) return;
            const auto part = kernels::parallel_mod3_histogram(lo, hi - lo, options.threads);
            for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += part[i];
        },
        [&](std::size_t idx) {
            const Natural n = n_values[idx];
            DensityRow& row = rows[idx];
            row.n_limit = n;
            row.modulus = Modulus::three();
            row.divisible_count = exact_count(hist[0]);
            row.empirical_density = ratio(row.divisible_count, n);
            row.analytic_lower_bound = lower_bound_mod3(n);
        });
    return rows;
}

}  // namespace catmod
