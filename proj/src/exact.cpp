#include "catmod/exact.hpp"

#include <stdexcept>

namespace catmod {

namespace {

mpz_class pow10(unsigned long e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
    return out;
}

// 10^e as a rational, e may be negative.
Rational pow10_rational(long e) {
    return e >= 0 ? Rational(pow10(static_cast<unsigned long>(e))) : Rational(1, pow10(static_cast<unsigned long>(-e)));
}

}  // namespace

std::string to_decimal_string(const Rational& r, int significant) {
    if (significant < 1) throw std::invalid_argument("significant digits must be positive");
    if (sgn(r) < 0) throw std::domain_error("decimal rendering of a negative value");
    if (sgn(r) == 0) return "0." + std::string(static_cast<std::size_t>(significant), '0');

    // e = floor(log10 r)
    long e = static_cast<long>(mpz_sizeinbase(r.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(r.get_den_mpz_t(), 10));
    while (pow10_rational(e) > r) --e;
    while (pow10_rational(e + 1) <= r) ++e;

    const Rational scaled = r * pow10_rational(significant - 1 - e) + Rational(1, 2);
    mpz_class digits = scaled.get_num() / scaled.get_den();
    if (digits == pow10(static_cast<unsigned long>(significant))) {
        digits /= 10;
        ++e;
    }
    const std::string s = digits.get_str();
    const auto sig = static_cast<std::size_t>(significant);

    if (e < 0) return "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + s;
    const auto int_len = static_cast<std::size_t>(e + 1);
    if (int_len >= sig) return s + std::string(int_len - sig, '0');
    return s.substr(0, int_len) + "." + s.substr(int_len);
}

}  // namespace catmod
