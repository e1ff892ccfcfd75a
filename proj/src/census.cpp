#include "catmod/census.hpp"

#include <stdexcept>
#include <string>

#include "catmod/classifier.hpp"
#include "catmod/kernels.hpp"

namespace catmod {

namespace {

void require_positive_t(Natural t) {
    if (t.value() == 0) throw std::invalid_argument("t must be at least 1");
}

void require_positive_k(Natural k) {
    if (k.value() == 0) throw std::invalid_argument("k must be at least 1");
}

kernels::ValuationHistogram valuation_histogram(Natural t, const EnumerationOptions& options) {
    require_positive_t(t);
    if (t.value() > options.max_t || t.value() > 63)
        throw std::out_of_range("enumeration guard: t = " + std::to_string(t.value()) +
                                " exceeds " + std::to_string(options.max_t));
    return kernels::parallel_valuation_histogram(0, std::uint64_t{1} << t.value(), options.threads);
}

}  // namespace

ExactCount census_at(const ValuationCensus& census, std::uint64_t k) {
    const auto it = census.find(k);
    return it == census.end() ? ExactCount(0) : it->second;
}

ExactCount binomial(Natural t, Natural i) {
    if (i > t) return 0;
    ExactCount out;
    mpz_bin_uiui(out.get_mpz_t(), t.value(), i.value());
    return out;
}

ExactCount count_valuation_formula(Natural t, Natural k) {
    require_positive_t(t);
    if (k >= t) return 0;
    return binomial(t, k + Natural{1u});
}

ExactCount count_divisible_formula(Natural t, Natural k) {
    require_positive_t(t);
    require_positive_k(k);
    ExactCount sum = 0;
    for (std::uint64_t i = k.value() + 1; i <= t.value(); ++i) sum += binomial(t, i);
    return sum;
}

ExactCount count_half_residue_formula(Natural t, Natural k) {
    require_positive_t(t);
    require_positive_k(k);
    return binomial(t, k);
}

ValuationCensus enumerate_valuation_census(Natural t, const EnumerationOptions& options) {
    const auto hist = valuation_histogram(t, options);
    ValuationCensus census;
    for (std::size_t k = 0; k < hist.size(); ++k)
        if (hist[k] != 0) census.emplace(k, exact_count(hist[k]));
    return census;
}

ExactCount enumerated_valuation_count(Natural t, Natural k, const EnumerationOptions& options) {
    return census_at(enumerate_valuation_census(t, options), k.value());
}

ExactCount enumerated_divisible_count(Natural t, Natural k, const EnumerationOptions& options) {
    require_positive_k(k);
    ExactCount sum = 0;
    for (const auto& [valuation, count] : enumerate_valuation_census(t, options))
        if (valuation >= k.value()) sum += count;
    return sum;
}

ExactCount enumerated_half_residue_count(Natural t, Natural k, const EnumerationOptions& options) {
    require_positive_k(k);
    return enumerated_valuation_count(t, k - Natural{1u}, options);
}

CensusReport valuation_census_report(Natural t, Natural k, bool enumerate, const EnumerationOptions& options) {
    CensusReport report{t, k, count_valuation_formula(t, k), std::nullopt, true};
    if (enumerate) {
        report.enumerated_count = enumerated_valuation_count(t, k, options);
        report.agrees = report.formula_count == *report.enumerated_count;
    }
    return report;
}

BoundaryDiscrepancy valuation_boundary_discrepancy(Natural t, const EnumerationOptions& options) {
    const auto hist = valuation_histogram(t, options);
    const Natural witness = (std::uint64_t{1} << t.value()) - 1;
    const Natural witness_valuation = classify_two_adic(witness).valuation;

    kernels::ValuationHistogram below_witness{};
    kernels::tally_valuations(0, witness.value(), below_witness);

    BoundaryDiscrepancy d{t, count_valuation_formula(t, 0u), exact_count(hist[0]), 0,
                          witness, witness_valuation, exact_count(below_witness[0])};
    d.excess = d.enumerated_count - d.formula_count;
    return d;
}

ExactCount count_tstar_members_below(const ExactCount& limit) {
    if (sgn(limit) <= 0) return 0;
    const std::string digits = limit.get_str(3);  // most significant first
    const std::size_t top = digits.size() - 1;
    ExactCount count = 0;
    for (std::size_t pos = 0; pos < digits.size(); ++pos) {
        const std::size_t place = top - pos;
        const unsigned d = static_cast<unsigned>(digits[pos] - '0');
        if (place == 0) {
            count += d;
            break;
        }
        // Every completion below this place: 2 choices per place >= 1, 3 at place 0.
        ExactCount completions = 3;
        mpz_mul_2exp(completions.get_mpz_t(), completions.get_mpz_t(), place - 1);
        count += ExactCount(d < 2 ? d : 2) * completions;
        if (d == 2) break;
    }
    return count;
}

ExactCount count_tstar_below(Natural limit_exponent) {
    if (limit_exponent.value() == 0) throw std::invalid_argument("limit exponent must be at least 1");
    ExactCount limit;
    mpz_ui_pow_ui(limit.get_mpz_t(), 3, limit_exponent.value());
    return count_tstar_members_below(limit);
}

}  // namespace catmod
