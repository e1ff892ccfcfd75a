#include <doctest.h>

#include <bit>
#include <random>

#include "catmod/padic_digits.hpp"
#include "reference.hpp"

using namespace catmod;

namespace {

std::vector<std::uint32_t> v(std::initializer_list<std::uint32_t> xs) { return xs; }

}  // namespace

TEST_CASE("expand: worked examples") {
    CHECK(expand(0, 2).digits().empty());
    CHECK(expand(11, 2) == DigitExpansion(2, v({1, 1, 0, 1})));
    CHECK(expand(7, 3) == DigitExpansion(3, v({1, 2})));
    CHECK(expand(0, 3).value() == 0);
}

TEST_CASE("expand rejects base below 2") {
    CHECK_THROWS_AS(expand(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(expand(5, 0), std::invalid_argument);
}

TEST_CASE("DigitExpansion enforces canonical form") {
    CHECK_THROWS_AS(DigitExpansion(2, v({1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(DigitExpansion(3, v({3})), std::invalid_argument);
    CHECK_THROWS_AS(DigitExpansion(1, v({})), std::invalid_argument);
    CHECK_NOTHROW(DigitExpansion(10, v({})));
}

TEST_CASE("DigitExpansion::value overflows loudly") {
    std::vector<std::uint32_t> ones(65, 1);
    CHECK_THROWS_AS((void)DigitExpansion(2, ones).value(), std::overflow_error);
}

TEST_CASE("expansion matches the repeated-division reference and reconstructs n") {
    std::mt19937_64 rng(7);
    for (unsigned base : {2u, 3u, 5u, 10u, 16u, 255u}) {
        for (int i = 0; i < 500; ++i) {
            const std::uint64_t n = (i < 100) ? static_cast<std::uint64_t>(i) : rng() >> (rng() % 64);
            const DigitExpansion e = expand(n, base);
            const auto ref = reference::digits(n, base);
            REQUIRE(e.length() == ref.size());
            for (std::size_t j = 0; j < ref.size(); ++j) CHECK(e.digits()[j] == ref[j]);
            CHECK(e.value() == n);
        }
    }
    CHECK(expand(Natural::max_value, 2).value() == Natural::max_value);
    CHECK(expand(Natural::max_value, 3).value() == Natural::max_value);
}

TEST_CASE("bit extraction and repeated division agree for base 2") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t n = rng() >> (i % 64);
        CHECK(detail::binary_digits_by_bits(n) == detail::digits_by_division(n, 2));
    }
    CHECK(detail::binary_digits_by_bits(0).empty());
}

TEST_CASE("digit_ones_count: worked examples") {
    CHECK(digit_ones_count(expand(0, 2)) == 0);
    CHECK(digit_ones_count(expand(5, 2)) == 2);
    CHECK(digit_ones_count(expand(7, 3)) == 1);
}

TEST_CASE("digit_ones_count in base 2 is the binary digit sum") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t n = rng();
        CHECK(digit_ones_count(expand(n, 2)) == static_cast<std::uint64_t>(std::popcount(n)));
    }
}

TEST_CASE("omega and cofactor: worked examples") {
    CHECK(omega(12, 2) == 2);
    CHECK(omega(7, 2) == 0);
    CHECK(omega(18, 3) == 2);
    CHECK(cofactor(12, 2) == 3);
    CHECK(cofactor(7, 2) == 7);
    CHECK(cofactor(18, 3) == 2);
}

TEST_CASE("omega and cofactor reject zero") {
    CHECK_THROWS_AS(omega(0, 2), std::domain_error);
    CHECK_THROWS_AS(cofactor(0, 3), std::domain_error);
    CHECK_THROWS_AS(omega(4, 1), std::invalid_argument);
}

TEST_CASE("cofactor · p^omega = n and the cofactor is coprime to p") {
    std::mt19937_64 rng(5);
    for (unsigned p : {2u, 3u, 7u}) {
        for (std::uint64_t n = 1; n < 3000; ++n) {
            const Natural a = omega(n, p);
            const Natural cf = cofactor(n, p);
            CHECK(a == reference::trial_valuation(n, p));
            CHECK(cf * checked_pow(p, static_cast<unsigned>(a.value())) == n);
            CHECK(cf.value() % p != 0);
        }
        for (int i = 0; i < 1000; ++i) {
            const std::uint64_t n = (rng() >> (rng() % 63)) | 1u;
            const std::uint64_t shifted = n << (rng() % 8);
            CHECK(cofactor(shifted, p) * checked_pow(p, static_cast<unsigned>(omega(shifted, p).value())) == shifted);
        }
    }
    for (std::uint64_t n = 1; n < 5000; ++n) CHECK(cofactor(n, 2).value() % 2 == 1);
}

TEST_CASE("alpha_of: worked examples") {
    CHECK(alpha_of(0) == 0);
    CHECK(alpha_of(4) == 2);
    CHECK(alpha_of(10) == 5);
    CHECK_THROWS_AS(alpha_of(Natural::max_value), std::overflow_error);
}

TEST_CASE("digit identity d(alpha(n)) + 1 = d(n+1)") {
    for (std::uint64_t n = 0; n < 70000; ++n)
        CHECK(digit_ones_count(expand(alpha_of(n), 2)) + Natural{1u} == digit_ones_count(expand(n + 1, 2)));
    std::mt19937_64 rng(13);
    for (int i = 0; i < 5000; ++i) {
        const std::uint64_t n = rng() >> 1;
        CHECK(digit_ones_count(expand(alpha_of(n), 2)) + Natural{1u} == digit_ones_count(expand(n + 1, 2)));
    }
}

TEST_CASE("d3_star: worked examples") {
    CHECK(d3_star(1) == 0);
    CHECK(d3_star(5) == 1);
    CHECK(d3_star(13) == 2);
    CHECK(d3_star(0) == 0);
}

TEST_CASE("d3_star excludes position 0 and is bounded by the length") {
    for (std::uint64_t n = 0; n < 3; ++n) CHECK(d3_star(n) == 0);
    for (std::uint64_t n = 3; n < 20000; ++n) {
        const auto d = reference::digits(n, 3);
        std::uint64_t expected = 0;
        for (std::size_t i = 1; i < d.size(); ++i) expected += d[i] == 1;
        CHECK(d3_star(n) == expected);
        CHECK(d3_star(n).value() <= expand(n, 3).length() - 1);
    }
}

TEST_CASE("is_tstar01_member: worked examples") {
    CHECK(is_tstar01_member(2));
    CHECK(is_tstar01_member(5));
    CHECK_FALSE(is_tstar01_member(7));
}

TEST_CASE("is_tstar01_member matches the digit reference and the generating form") {
    for (std::uint64_t n = 0; n < 3; ++n) CHECK(is_tstar01_member(n));
    for (std::uint64_t n = 0; n < 30000; ++n) CHECK(is_tstar01_member(n) == reference::tstar_member(n));

    // Σ_{i>=1} b_i 3^i + c with b_i ∈ {0,1}, c ∈ {0,1,2}.
    for (std::uint64_t mask = 0; mask < (1u << 12); ++mask) {
        std::uint64_t base = 0;
        std::uint64_t power = 3;
        for (unsigned i = 0; i < 12; ++i, power *= 3)
            if (mask >> i & 1u) base += power;
        for (std::uint64_t c = 0; c < 3; ++c) CHECK(is_tstar01_member(base + c));
    }
}

TEST_CASE("Natural arithmetic fails loudly") {
    CHECK_THROWS_AS(Natural::max_value + Natural{1u}, std::overflow_error);
    CHECK_THROWS_AS(Natural{3u} - Natural{4u}, std::underflow_error);
    CHECK_THROWS_AS(Natural{std::uint64_t{1} << 32} * Natural{std::uint64_t{1} << 32}, std::overflow_error);
    CHECK_THROWS_AS(Natural{-1}, std::out_of_range);
    CHECK(checked_pow(3u, 40) == Natural{12157665459056928801ull});
    CHECK_THROWS_AS(checked_pow(3u, 41), std::overflow_error);
}
