#pragma once

// Classification of Catalan numbers modulo 2^k and modulo 3 from the digits
// of n alone; C_n itself is never formed.
//
// The 2-adic valuation of C_n equals the binary digit sum of
// alpha(n) = (CF_2(n+1) - 1) / 2. That fixes divisibility by 2^k and the
// residue 2^(k-1) mod 2^k, but not the full residue mod 2^k, so only those
// two predicates are offered.
//
// Modulo 3, C_n is nonzero exactly when n+1 has no base-3 digit 2 above
// position 0, and then C_n ≡ (-1)^{d3*(n+1)}.

#include <cstdint>

#include "catmod/natural.hpp"

namespace catmod {

struct TwoAdicClass {
    Natural n;
    Natural alpha;
    Natural valuation;  // ω₂(C_n)

    friend bool operator==(const TwoAdicClass&, const TwoAdicClass&) = default;
};

struct Mod3Residue {
    Natural n;
    std::uint8_t residue = 0;     // C_n mod 3
    bool in_shifted_tstar = false;  // n+1 ∈ T*(01)
    Natural sign_exponent;         // d3*(n+1); meaningful only when in_shifted_tstar

    friend bool operator==(const Mod3Residue&, const Mod3Residue&) = default;
};

TwoAdicClass classify_two_adic(Natural n);

/// 2^k | C_n. Throws std::invalid_argument for k = 0.
bool divisible_by_2k(Natural n, Natural k);

/// C_n ≡ 2^(k-1) mod 2^k. Throws std::invalid_argument for k = 0.
bool is_half_residue_2k(Natural n, Natural k);

Mod3Residue catalan_mod3(Natural n);

}  // namespace catmod
