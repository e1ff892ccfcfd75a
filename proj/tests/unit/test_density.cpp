#include <doctest.h>

#include <random>

#include "catmod/census.hpp"
#include "catmod/classifier.hpp"
#include "catmod/density.hpp"
#include "catmod/padic_digits.hpp"
#include "reference.hpp"

using namespace catmod;

namespace {

Rational q(std::uint64_t num, std::uint64_t den) {
    Rational r(exact_count(num), exact_count(den));
    r.canonicalize();
    return r;
}

std::vector<Natural> nats(std::initializer_list<std::uint64_t> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("floor_log: worked examples") {
    CHECK(floor_log(1024, 2) == 10);
    CHECK(floor_log(1000000, 2) == 19);
    CHECK(floor_log(80, 3) == 3);
    CHECK(floor_log(1, 2) == 0);
    CHECK(floor_log(Natural::max_value, 2) == 63);
    CHECK(floor_log(12157665459056928801ull, 3) == 40);
    CHECK_THROWS_AS(floor_log(0, 2), std::domain_error);
    CHECK_THROWS_AS(floor_log(5, 1), std::invalid_argument);
}

TEST_CASE("floor_log satisfies base^e <= N < base^(e+1)") {
    std::mt19937_64 rng(29);
    for (unsigned base : {2u, 3u, 10u}) {
        for (int i = 0; i < 3000; ++i) {
            std::uint64_t n = rng() >> (rng() % 64);
            if (n == 0) n = 1;
            const auto e = static_cast<unsigned>(floor_log(n, base).value());
            unsigned __int128 power = 1;
            for (unsigned j = 0; j < e; ++j) power *= base;
            CHECK(power <= n);
            CHECK(power * base > n);
        }
        // Around exact powers, where floating-point logs misround.
        for (unsigned e = 1; e < 40; ++e) {
            Natural p;
            try {
                p = checked_pow(base, e);
            } catch (const std::overflow_error&) {
                break;
            }
            CHECK(floor_log(p, base) == e);
            CHECK(floor_log(p - Natural{1u}, base) == e - 1);
        }
    }
}

TEST_CASE("lower_bound_mod2k: worked examples") {
    CHECK(lower_bound_mod2k(1000000, 1) == Rational(1) - q(20, 1000000));
    CHECK(lower_bound_mod2k(1000000, 1) == q(99998, 100000));
    CHECK(lower_bound_mod2k(1u << 20, 2) == Rational(1) - q(231, 1u << 20));
    CHECK(lower_bound_mod2k(1, 1) == 0);
    CHECK(lower_bound_mod2k(2, 3) == q(1, 2) - Rational(1));  // 1 - 3/2, not clamped
    CHECK_THROWS_AS(lower_bound_mod2k(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound_mod2k(5, 0), std::invalid_argument);
}

TEST_CASE("tstar_count_bound: worked examples") {
    CHECK(tstar_count_bound(8) == 6);
    CHECK(tstar_count_bound(2) == 3);
    CHECK(tstar_count_bound(81) == 48);
}

TEST_CASE("density_sweep_mod2k: worked examples") {
    const auto rows = density_sweep_mod2k(nats({1024, 1, 16}), 1);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].n_limit == 1024);
    CHECK(rows[0].divisible_count == 1013);
    CHECK(rows[1].n_limit == 1);
    CHECK(rows[1].empirical_density == 0);
    CHECK(rows[2].divisible_count == 11);
    CHECK(rows[2].modulus == Modulus::two_to(1));

    const auto million = density_sweep_mod2k(nats({1000000}), 1);
    CHECK(million[0].divisible_count == 999980);
    CHECK(million[0].empirical_density == q(99998, 100000));
}

TEST_CASE("density_sweep_mod2k errors") {
    CHECK_THROWS_AS(density_sweep_mod2k(nats({10}), 0), std::invalid_argument);
    CHECK_THROWS_AS(density_sweep_mod2k(nats({0}), 1), std::invalid_argument);
    CHECK_THROWS_AS(density_sweep_mod2k(nats({(1u << 26) + 1}), 1), std::out_of_range);
    CHECK_THROWS_AS(density_sweep_mod2k(nats({100}), 1, {.max_n = 99}), std::out_of_range);
}

TEST_CASE("mod-2^k density at N = 2^t is exactly 1 - (t+1)/2^t and strictly increasing") {
    std::vector<Natural> limits;
    for (unsigned t = 1; t <= 22; ++t) limits.push_back(std::uint64_t{1} << t);
    const auto rows = density_sweep_mod2k(limits, 1);
    for (unsigned t = 1; t <= 22; ++t) {
        CHECK(rows[t - 1].empirical_density == Rational(1) - q(t + 1, std::uint64_t{1} << t));
        if (t > 1) CHECK(rows[t - 1].empirical_density > rows[t - 2].empirical_density);
    }
    CHECK(rows[17].empirical_density >= q(9999, 10000));
}

TEST_CASE("sweep counts agree with direct classifier counts and satisfy the bound") {
    std::mt19937_64 rng(31);
    std::vector<Natural> limits;
    for (int i = 0; i < 40; ++i) limits.push_back(1 + rng() % 5000);
    limits.push_back(1);
    limits.push_back(4999);
    for (std::uint64_t k = 1; k <= 4; ++k) {
        const auto rows = density_sweep_mod2k(limits, k, {.threads = 3});
        for (std::size_t i = 0; i < limits.size(); ++i) {
            std::uint64_t direct = 0;
            for (std::uint64_t n = 0; n < limits[i].value(); ++n) direct += divisible_by_2k(n, k);
            CHECK(rows[i].divisible_count == exact_count(direct));
            CHECK(rows[i].empirical_density >= rows[i].analytic_lower_bound);
            CHECK(rows[i].analytic_lower_bound >= 0);
            CHECK(rows[i].empirical_density <= 1);
        }
    }
}

TEST_CASE("density_sweep_mod3: worked examples") {
    // 9 = 100_3 lies in T*(01), so C_8 ≡ 2 and only n ∈ {5, 6, 7} are divisible.
    const auto rows = density_sweep_mod3(nats({9, 1, 6561}));
    CHECK(rows[0].divisible_count == 3);
    CHECK(rows[0].empirical_density == q(1, 3));
    CHECK(rows[1].empirical_density == 0);
    CHECK(rows[2].divisible_count == 6177);
    CHECK(rows[2].divisible_count >= 6561 - 3 * 256);
    CHECK(rows[2].modulus == Modulus::three());
    CHECK(rows[2].analytic_lower_bound == Rational(1) - q(768, 6561));
    CHECK(rows[0].analytic_lower_bound == 0);  // 1 - 12/9 clamped
}

TEST_CASE("mod-3 sweep: counts match the big-integer oracle and the complement bound holds") {
    const auto catalan = reference::catalan_by_convolution(300);
    std::vector<Natural> limits;
    for (std::uint64_t n = 1; n <= 300; ++n) limits.push_back(n);
    const auto rows = density_sweep_mod3(limits);
    std::uint64_t divisible = 0;
    for (std::uint64_t n = 1; n <= 300; ++n) {
        divisible += (catalan[n - 1] % 3 == 0);
        CHECK(rows[n - 1].divisible_count == exact_count(divisible));
        CHECK(exact_count(n - divisible) <= tstar_count_bound(n));
        CHECK(rows[n - 1].empirical_density >= rows[n - 1].analytic_lower_bound);
    }
}
