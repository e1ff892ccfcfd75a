#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace catmod {

/// Arbitrary-precision non-negative count.
using ExactCount = mpz_class;

/// Exact rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Exact copy of a 64-bit count (independent of the width of unsigned long).
inline ExactCount exact_count(std::uint64_t v) {
    ExactCount out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
    return out;
}

inline std::string to_string(const ExactCount& v) { return v.get_str(); }

/// "p/q" with q > 0, reduced.
inline std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Decimal rendering with `significant` significant digits, rounded half up.
/// Zero renders as "0." followed by `significant` zeros. Only non-negative
/// values are accepted (std::domain_error otherwise).
std::string to_decimal_string(const Rational& r, int significant = 12);

}  // namespace catmod
