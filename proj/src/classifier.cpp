#include "catmod/classifier.hpp"

#include <stdexcept>

#include "catmod/padic_digits.hpp"

namespace catmod {

namespace {

void require_positive_k(Natural k) {
    if (k.value() == 0) throw std::invalid_argument("k must be at least 1");
}

}  // namespace

TwoAdicClass classify_two_adic(Natural n) {
    const Natural alpha = alpha_of(n);
    return TwoAdicClass{n, alpha, digit_ones_count(expand(alpha, 2))};
}

bool divisible_by_2k(Natural n, Natural k) {
    require_positive_k(k);
    return classify_two_adic(n).valuation >= k;
}

bool is_half_residue_2k(Natural n, Natural k) {
    require_positive_k(k);
    return classify_two_adic(n).valuation == k - Natural{1u};
}

Mod3Residue catalan_mod3(Natural n) {
    const Natural shifted = n + Natural{1u};
    Mod3Residue r{n, 0, is_tstar01_member(shifted), d3_star(shifted)};
    if (r.in_shifted_tstar) r.residue = (r.sign_exponent.value() % 2 == 0) ? 1 : 2;
    return r;
}

}  // namespace catmod
