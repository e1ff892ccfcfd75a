#pragma once

// Residue-class census over n < 2^t: closed-form binomial counts next to a
// ground-truth enumeration through the classifier.
//
// The closed form for #{n < 2^t : ω₂(C_n) = k} is C(t, k+1). It is exact for
// k >= 1 but undercounts k = 0 by one: n = 2^t - 1 has α(n) = 0, and its
// binary form has no 0 separator digit below α, so the counting argument
// behind the closed form misses it. The half-residue count C(t, k) inherits
// the same miss at k = 1. The divisibility count Σ_{i>k} C(t, i) is exact
// for every k >= 1. Formula functions return the closed forms verbatim;
// ground truth comes from the enumeration functions.

#include <cstdint>
#include <map>
#include <optional>

#include "catmod/exact.hpp"
#include "catmod/natural.hpp"

namespace catmod {

/// Default ceiling on t for enumeration over [0, 2^t).
inline constexpr unsigned kDefaultEnumerationMaxT = 30;

struct EnumerationOptions {
    unsigned max_t = kDefaultEnumerationMaxT;
    unsigned threads = 1;
};

/// Valuation k -> number of n < 2^t with ω₂(C_n) = k. Only nonzero counts
/// are stored.
using ValuationCensus = std::map<std::uint64_t, ExactCount>;

/// Count for valuation k in a census, zero when absent.
ExactCount census_at(const ValuationCensus& census, std::uint64_t k);

struct CensusReport {
    Natural t;
    Natural k;
    ExactCount formula_count;
    std::optional<ExactCount> enumerated_count;
    bool agrees = true;  // formula_count == enumerated_count when both present
};

/// Exact C(t, i); zero when i > t.
ExactCount binomial(Natural t, Natural i);

/// C(t, k+1). Throws std::invalid_argument for t = 0.
ExactCount count_valuation_formula(Natural t, Natural k);

/// Σ_{i=k+1}^{t} C(t, i). Throws std::invalid_argument for t = 0 or k = 0.
ExactCount count_divisible_formula(Natural t, Natural k);

/// C(t, k). Throws std::invalid_argument for t = 0 or k = 0.
ExactCount count_half_residue_formula(Natural t, Natural k);

/// Tallies ω₂(C_n) for n ∈ [0, 2^t). Throws std::invalid_argument for t = 0
/// and std::out_of_range when t exceeds options.max_t.
ValuationCensus enumerate_valuation_census(Natural t, const EnumerationOptions& options = {});

/// Ground-truth #{n < 2^t : ω₂(C_n) = k}, from enumeration.
ExactCount enumerated_valuation_count(Natural t, Natural k, const EnumerationOptions& options = {});

/// Ground-truth #{n < 2^t : 2^k | C_n}, from enumeration. k >= 1.
ExactCount enumerated_divisible_count(Natural t, Natural k, const EnumerationOptions& options = {});

/// Ground-truth #{n < 2^t : C_n ≡ 2^(k-1) mod 2^k}, from enumeration. k >= 1.
ExactCount enumerated_half_residue_count(Natural t, Natural k, const EnumerationOptions& options = {});

/// Formula C(t, k+1) paired with the enumerated count when `enumerate` is set.
CensusReport valuation_census_report(Natural t, Natural k, bool enumerate,
                                     const EnumerationOptions& options = {});

/// The k = 0 boundary case for a given t.
struct BoundaryDiscrepancy {
    Natural t;
    ExactCount formula_count;      // C(t, 1) = t
    ExactCount enumerated_count;   // true count of odd C_n below 2^t
    ExactCount excess;             // enumerated - formula
    Natural witness;               // 2^t - 1
    Natural witness_valuation;     // ω₂(C_witness)
    ExactCount count_without_witness;  // enumerated count over n < 2^t - 1
};

BoundaryDiscrepancy valuation_boundary_discrepancy(Natural t, const EnumerationOptions& options = {});

/// Number of T*(01) members in [0, limit), via a digit count over the base-3
/// form of limit.
ExactCount count_tstar_members_below(const ExactCount& limit);

/// Number of T*(01) members below 3^e, e >= 1. Equal to 3·2^(e-1).
ExactCount count_tstar_below(Natural limit_exponent);

}  // namespace catmod
