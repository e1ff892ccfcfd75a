#include "catmod/oracle.hpp"

#include <stdexcept>

#include "catmod/classifier.hpp"
#include "catmod/padic_digits.hpp"

namespace catmod::oracle {

namespace {

void require_within(Natural n, std::uint64_t bound) {
    if (n.value() > bound)
        throw std::out_of_range("oracle bound exceeded: n = " + std::to_string(n.value()) +
                                " > " + std::to_string(bound));
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

CatalanIterator::CatalanIterator(Natural start) : n_(start), value_(catalan_direct(start)) {}

void CatalanIterator::advance() {
    const std::uint64_t m = n_.value();
    const Natural factor = Natural{2u} * (Natural{2u} * n_ + Natural{1u});
    const Natural divisor = n_ + Natural{2u};
    value_ *= exact_count(factor.value());
    if (mpz_divisible_p(value_.get_mpz_t(), exact_count(divisor.value()).get_mpz_t()) == 0)
        throw std::logic_error("Catalan recurrence: inexact division at m = " + std::to_string(m));
    mpz_divexact(value_.get_mpz_t(), value_.get_mpz_t(), exact_count(divisor.value()).get_mpz_t());
    n_ += Natural{1u};
}

BigCatalan catalan_exact(Natural n, std::uint64_t bound) {
    require_within(n, bound);
    CatalanIterator it;
    while (it.index() < n) it.advance();
    return {n, it.value()};
}

ExactCount catalan_direct(Natural n) {
    ExactCount central;
    const Natural two_n = Natural{2u} * n;
    mpz_bin_uiui(central.get_mpz_t(), two_n.value(), n.value());
    const ExactCount divisor = exact_count((n + Natural{1u}).value());
    if (mpz_divisible_p(central.get_mpz_t(), divisor.get_mpz_t()) == 0)
        throw std::logic_error("binomial(2n, n) not divisible by n + 1");
    mpz_divexact(central.get_mpz_t(), central.get_mpz_t(), divisor.get_mpz_t());
    return central;
}

ExactCount catalan_residue(Natural n, const ExactCount& m, std::uint64_t bound) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    const BigCatalan c = catalan_exact(n, bound);
    ExactCount r;
    mpz_fdiv_r(r.get_mpz_t(), c.value.get_mpz_t(), m.get_mpz_t());
    return r;
}

Natural valuation_of(const ExactCount& value, unsigned p) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
    if (sgn(value) <= 0) throw std::domain_error("valuation of a non-positive value");
    if (p == 2) return static_cast<std::uint64_t>(mpz_scan1(value.get_mpz_t(), 0));
    ExactCount rest;
    const ExactCount prime = p;
    return static_cast<std::uint64_t>(mpz_remove(rest.get_mpz_t(), value.get_mpz_t(), prime.get_mpz_t()));
}

Natural valuation_by_factorials(Natural n, unsigned p) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
    const std::uint64_t two_n = (Natural{2u} * n).value();
    std::uint64_t total = 0;
    // Each term ⌊2n/q⌋ - 2⌊n/q⌋ is 0 or 1.
    for (std::uint64_t q = p; q <= two_n; ) {
        total += two_n / q - 2 * (n.value() / q);
        if (q > two_n / p) break;
        q *= p;
    }
    const Natural tail = omega(n + Natural{1u}, p);
    if (tail.value() > total) throw std::logic_error("factorial valuation went negative");
    return total - tail.value();
}

Natural valuation_exact(Natural n, unsigned p, std::uint64_t bound) {
    const Natural direct = valuation_of(catalan_exact(n, bound).value, p);
    const Natural by_factorials = valuation_by_factorials(n, p);
    if (direct != by_factorials)
        throw std::logic_error("valuation routes disagree at n = " + std::to_string(n.value()));
    return direct;
}

VerificationReport verify_range(Natural n_max, Natural k_max, std::uint64_t bound) {
    if (n_max.value() > 0) require_within(n_max - Natural{1u}, bound);

    VerificationReport report;
    std::uint64_t checks = 0;
    auto check = [&](bool ok, Natural n, std::string what, std::string expected, std::string actual) {
        ++checks;
        if (!ok) report.mismatches.push_back({n, std::move(what), std::move(expected), std::move(actual)});
    };

    CatalanIterator it;
    ExactCount residue;
    ExactCount half;
    for (std::uint64_t i = 0; i < n_max.value(); ++i, it.advance()) {
        const Natural n = i;
        const ExactCount& exact = it.value();

        const Natural expected_valuation = valuation_of(exact, 2);
        const Natural second_route = valuation_by_factorials(n, 2);
        check(expected_valuation == second_route, n, "oracle routes (p=2)",
              std::to_string(expected_valuation.value()), std::to_string(second_route.value()));

        const TwoAdicClass cls = classify_two_adic(n);
        check(cls.valuation == expected_valuation, n, "valuation", std::to_string(expected_valuation.value()),
              std::to_string(cls.valuation.value()));

        const auto expected_mod3 = mpz_fdiv_ui(exact.get_mpz_t(), 3);
        const Mod3Residue m3 = catalan_mod3(n);
        check(m3.residue == expected_mod3, n, "mod3", std::to_string(expected_mod3), std::to_string(m3.residue));

        for (std::uint64_t k = 1; k <= k_max.value(); ++k) {
            mpz_fdiv_r_2exp(residue.get_mpz_t(), exact.get_mpz_t(), k);
            half = 0;
            mpz_setbit(half.get_mpz_t(), k - 1);
            const bool expect_divisible = sgn(residue) == 0;
            const bool expect_half = residue == half;
            const bool got_divisible = divisible_by_2k(n, k);
            const bool got_half = is_half_residue_2k(n, k);
            check(got_divisible == expect_divisible, n, "divisible k=" + std::to_string(k),
                  bool_text(expect_divisible), bool_text(got_divisible));
            check(got_half == expect_half, n, "half-residue k=" + std::to_string(k), bool_text(expect_half),
                  bool_text(got_half));
        }
    }
    report.n_checked = n_max;
    report.checks_performed = checks;
    return report;
}

}  // namespace catmod::oracle
