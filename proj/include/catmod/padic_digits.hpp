#pragma once

// Base-p digit expansions and the digit/valuation primitives the Catalan
// classifiers are built from.

#include <cstdint>
#include <span>
#include <vector>

#include "catmod/natural.hpp"

namespace catmod {

/// Canonical base-p expansion, least-significant digit first. Zero expands
/// to the empty sequence; otherwise the last digit is nonzero.
class DigitExpansion {
public:
    /// Validates the canonical-form invariants; throws std::invalid_argument.
    DigitExpansion(unsigned base, std::vector<std::uint32_t> digits);

    [[nodiscard]] unsigned base() const noexcept { return base_; }
    [[nodiscard]] std::span<const std::uint32_t> digits() const noexcept { return digits_; }
    [[nodiscard]] std::size_t length() const noexcept { return digits_.size(); }

    /// Σ digits[i]·base^i; throws std::overflow_error beyond 64 bits.
    [[nodiscard]] Natural value() const;

    friend bool operator==(const DigitExpansion&, const DigitExpansion&) = default;

private:
    unsigned base_;
    std::vector<std::uint32_t> digits_;
};

/// Throws std::invalid_argument when base < 2.
DigitExpansion expand(Natural n, unsigned base);

/// Number of digit positions (position 0 included) holding exactly 1.
/// For base 2 this is the binary digit sum.
Natural digit_ones_count(const DigitExpansion& e);

/// Largest a with base^a | n. Throws std::domain_error for n = 0.
Natural omega(Natural n, unsigned base);

/// n / base^omega(n, base). Throws std::domain_error for n = 0.
Natural cofactor(Natural n, unsigned base);

/// (CF_2(n+1) - 1) / 2. Throws std::overflow_error when n+1 does not fit.
Natural alpha_of(Natural n);

/// Count of base-3 digits equal to 1 at positions i >= 1.
Natural d3_star(Natural n);

/// True iff every base-3 digit at position i >= 1 is 0 or 1.
bool is_tstar01_member(Natural n);

namespace detail {
// Repeated-division and bit-extraction expansions; expand() uses the latter
// for base 2. Exposed so the two can be checked against each other.
std::vector<std::uint32_t> digits_by_division(std::uint64_t n, unsigned base);
std::vector<std::uint32_t> binary_digits_by_bits(std::uint64_t n);
}  // namespace detail

}  // namespace catmod
