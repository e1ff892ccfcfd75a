#pragma once

// Ground truth: exact C_n as a big integer, its residues and valuations, and
// a range verifier that checks every digit-based result against it.

#include <cstdint>
#include <string>
#include <vector>

#include "catmod/exact.hpp"
#include "catmod/natural.hpp"

namespace catmod::oracle {

inline constexpr std::uint64_t kDefaultBound = 50000;

struct BigCatalan {
    Natural n;
    ExactCount value;
};

/// Walks C_0, C_1, ... by C_{m+1} = C_m · 2(2m+1) / (m+2). Each step checks
/// the division is exact and throws std::logic_error if it is not.
class CatalanIterator {
public:
    CatalanIterator() = default;
    /// Starts at C_start, computed by the direct binomial formula.
    explicit CatalanIterator(Natural start);

    [[nodiscard]] Natural index() const noexcept { return n_; }
    [[nodiscard]] const ExactCount& value() const noexcept { return value_; }

    void advance();

private:
    Natural n_{0u};
    ExactCount value_{1};
    ExactCount scratch_;
};

/// Exact C_n by the recurrence. Throws std::out_of_range when n > bound.
BigCatalan catalan_exact(Natural n, std::uint64_t bound = kDefaultBound);

/// binomial(2n, n) / (n+1), evaluated directly.
ExactCount catalan_direct(Natural n);

/// C_n mod m. Throws std::invalid_argument for m < 2, std::out_of_range when n > bound.
ExactCount catalan_residue(Natural n, const ExactCount& m, std::uint64_t bound = kDefaultBound);

/// Largest a with p^a | value, value > 0.
Natural valuation_of(const ExactCount& value, unsigned p);

/// ω_p(C_n) = Σ_i (⌊2n/p^i⌋ - 2⌊n/p^i⌋) - ω_p(n+1), on machine integers.
Natural valuation_by_factorials(Natural n, unsigned p);

/// ω_p(C_n) from the exact value, cross-checked against
/// valuation_by_factorials; std::logic_error if the two disagree.
Natural valuation_exact(Natural n, unsigned p, std::uint64_t bound = kDefaultBound);

struct Mismatch {
    Natural n;
    std::string check;  // e.g. "valuation", "mod3", "divisible k=3"
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    Natural n_checked;
    Natural checks_performed;
    std::vector<Mismatch> mismatches;

    [[nodiscard]] bool ok() const noexcept { return mismatches.empty(); }
};

/// Checks, for every n < n_max, the digit-based valuation, mod-3 residue and
/// (for k = 1..k_max) the divisibility and half-residue predicates against the
/// exact C_n. Mismatches are reported, not thrown. Throws std::out_of_range
/// when n_max - 1 exceeds the bound.
VerificationReport verify_range(Natural n_max, Natural k_max, std::uint64_t bound = kDefaultBound);

}  // namespace catmod::oracle
