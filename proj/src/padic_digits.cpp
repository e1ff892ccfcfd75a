#include "catmod/padic_digits.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace catmod {

namespace {

void require_base(unsigned base) {
    if (base < 2) throw std::invalid_argument("base must be at least 2, got " + std::to_string(base));
}

}  // namespace

namespace detail {

std::vector<std::uint32_t> digits_by_division(std::uint64_t n, unsigned base) {
    std::vector<std::uint32_t> out;
    while (n != 0) {
        out.push_back(static_cast<std::uint32_t>(n % base));
        n /= base;
    }
    return out;
}

std::vector<std::uint32_t> binary_digits_by_bits(std::uint64_t n) {
    const int width = std::bit_width(n);
    std::vector<std::uint32_t> out(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) out[static_cast<std::size_t>(i)] = (n >> i) & 1u;
    return out;
}

}  // namespace detail

DigitExpansion::DigitExpansion(unsigned base, std::vector<std::uint32_t> digits)
    : base_(base), digits_(std::move(digits)) {
    require_base(base_);
    for (auto d : digits_)
        if (d >= base_) throw std::invalid_argument("digit out of range for base");
    if (!digits_.empty() && digits_.back() == 0)
        throw std::invalid_argument("non-canonical expansion: leading zero digit");
}

Natural DigitExpansion::value() const {
    Natural acc{0u};
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
        acc *= Natural{base_};
        acc += Natural{*it};
    }
    return acc;
}

DigitExpansion expand(Natural n, unsigned base) {
    require_base(base);
    if (base == 2) return DigitExpansion(2, detail::binary_digits_by_bits(n.value()));
    return DigitExpansion(base, detail::digits_by_division(n.value(), base));
}

Natural digit_ones_count(const DigitExpansion& e) {
    std::uint64_t count = 0;
    for (auto d : e.digits()) count += (d == 1);
    return count;
}

Natural omega(Natural n, unsigned base) {
    require_base(base);
    if (n.value() == 0) throw std::domain_error("omega is undefined at 0");
    if (base == 2) return static_cast<std::uint64_t>(std::countr_zero(n.value()));
    std::uint64_t v = n.value();
    std::uint64_t a = 0;
    while (v % base == 0) {
        v /= base;
        ++a;
    }
    return a;
}

Natural cofactor(Natural n, unsigned base) {
    require_base(base);
    if (n.value() == 0) throw std::domain_error("cofactor is undefined at 0");
    if (base == 2) return n.value() >> std::countr_zero(n.value());
    std::uint64_t v = n.value();
    while (v % base == 0) v /= base;
    return v;
}

Natural alpha_of(Natural n) {
    const Natural odd = cofactor(n + Natural{1u}, 2);
    return (odd.value() - 1) / 2;
}

Natural d3_star(Natural n) {
    std::uint64_t v = n.value() / 3;
    std::uint64_t count = 0;
    for (; v != 0; v /= 3) count += (v % 3 == 1);
    return count;
}

bool is_tstar01_member(Natural n) {
    for (std::uint64_t v = n.value() / 3; v != 0; v /= 3)
        if (v % 3 == 2) return false;
    return true;
}

}  // namespace catmod
