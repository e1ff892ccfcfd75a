#include "catmod/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "catmod/census.hpp"
#include "catmod/classifier.hpp"
#include "catmod/density.hpp"
#include "catmod/oracle.hpp"
#include "catmod/output.hpp"

namespace catmod::cli {

namespace {

using output::Field;
using output::OutputRecord;
using output::Value;

// Usage-level failure: reported on the error stream, exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_decimal(std::string_view text) {
    std::uint64_t v = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc{} || ptr != last)
        throw std::invalid_argument("not a natural number: '" + std::string(text) + "'");
    return v;
}

struct GlobalOptions {
    std::string format = "csv";
    unsigned threads = 1;
    std::string max_n_guard;
};

struct Context {
    output::Format format;
    unsigned threads;
    std::optional<std::uint64_t> guard;
};

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_classify(const Context& ctx, const std::string& range_text, const std::string& k_text,
                 std::ostream& out) {
    const HalfOpenRange range = parse_range(range_text);
    if (range.end.value() > kMaxSupported)
        throw UsageError("range end exceeds supported width 2^62");
    if (ctx.guard && (range.end - range.begin).value() > *ctx.guard)
        throw UsageError("classify guard: range holds more than " + std::to_string(*ctx.guard) + " values");
    std::optional<Natural> k;
    if (!k_text.empty()) {
        k = parse_natural(k_text);
        if (k->value() == 0) throw UsageError("--k must be at least 1");
    }

    output::RecordWriter writer(out, ctx.format);
    for (std::uint64_t n = range.begin.value(); n < range.end.value(); ++n) {
        const TwoAdicClass two = classify_two_adic(n);
        const Mod3Residue three = catalan_mod3(n);
        OutputRecord rec{
            {"n", Value::number(two.n)},
            {"alpha", Value::number(two.alpha)},
            {"valuation", Value::number(two.valuation)},
            {"mod3_residue", Value::number(Natural{three.residue})},
            {"in_tstar_shifted", Value::boolean(three.in_shifted_tstar)},
        };
        if (k) {
            rec.push_back({"divisible_2k", Value::boolean(divisible_by_2k(n, *k))});
            rec.push_back({"half_residue_2k", Value::boolean(is_half_residue_2k(n, *k))});
        }
        writer.write(rec);
    }
    return kExitOk;
}

int cmd_census(const Context& ctx, const std::string& t_text, const std::string& k_text, bool enumerate,
               std::ostream& out, std::ostream& err) {
    const Natural t = parse_natural(t_text);
    if (t.value() == 0) throw UsageError("--t must be at least 1");
    const HalfOpenRange ks = k_text.empty() ? HalfOpenRange{0u, t + Natural{1u}} : parse_range(k_text);

    EnumerationOptions opts;
    opts.threads = ctx.threads;
    if (ctx.guard) opts.max_t = static_cast<unsigned>(floor_log(std::max<std::uint64_t>(*ctx.guard, 1), 2).value());

    std::optional<ValuationCensus> census;
    if (enumerate) {
        if (t.value() > opts.max_t)
            throw UsageError("enumeration guard: t = " + std::to_string(t.value()) + " exceeds " +
                             std::to_string(opts.max_t));
        census = enumerate_valuation_census(t, opts);
    }

    output::RecordWriter writer(out, ctx.format);
    std::uint64_t disagreements = 0;
    for (std::uint64_t k = ks.begin.value(); k < ks.end.value(); ++k) {
        const ExactCount f_val = count_valuation_formula(t, k);
        std::optional<ExactCount> f_div;
        std::optional<ExactCount> f_half;
        if (k >= 1) {
            f_div = count_divisible_formula(t, k);
            f_half = count_half_residue_formula(t, k);
        }
        auto opt = [](const std::optional<ExactCount>& v) { return v ? Value::number(*v) : Value::null(); };
        OutputRecord rec{
            {"t", Value::number(t)},
            {"k", Value::number(Natural{k})},
            {"formula_valuation", Value::number(f_val)},
            {"formula_divisible", opt(f_div)},
            {"formula_half", opt(f_half)},
        };
        if (census) {
            const ExactCount e_val = census_at(*census, k);
            std::optional<ExactCount> e_div;
            std::optional<ExactCount> e_half;
            if (k >= 1) {
                ExactCount sum = 0;
                for (const auto& [v, c] : *census)
                    if (v >= k) sum += c;
                e_div = sum;
                e_half = census_at(*census, k - 1);
            }
            const bool agrees = f_val == e_val && f_div == e_div && f_half == e_half;
            disagreements += !agrees;
            rec.push_back({"enumerated_valuation", Value::number(e_val)});
            rec.push_back({"enumerated_divisible", opt(e_div)});
            rec.push_back({"enumerated_half", opt(e_half)});
            rec.push_back({"agrees", Value::boolean(agrees)});
        }
        writer.write(rec);
    }
    if (census)
        err << "census: t=" << t << " rows=" << (ks.end - ks.begin) << " disagreements=" << disagreements << '\n';
    return kExitOk;
}

int cmd_density(const Context& ctx, const std::string& n_text, const std::string& k_text, bool mod3,
                std::ostream& out) {
    if (mod3 == !k_text.empty()) throw UsageError("density needs exactly one of --k or --mod3");
    const std::vector<Natural> n_values = parse_n_values(n_text);

    SweepOptions opts;
    opts.threads = ctx.threads;
    if (ctx.guard) opts.max_n = *ctx.guard;
    for (Natural n : n_values) {
        if (n.value() == 0) throw UsageError("N must be at least 1");
        if (n.value() > opts.max_n)
            throw UsageError("density guard: N = " + std::to_string(n.value()) + " exceeds " +
                             std::to_string(opts.max_n));
    }

    std::vector<DensityRow> rows;
    if (mod3) {
        rows = density_sweep_mod3(n_values, opts);
    } else {
        const Natural k = parse_natural(k_text);
        if (k.value() == 0) throw UsageError("--k must be at least 1");
        rows = density_sweep_mod2k(n_values, k, opts);
    }

    output::RecordWriter writer(out, ctx.format);
    for (const DensityRow& row : rows) {
        writer.write({
            {"N", Value::number(row.n_limit)},
            {"count", Value::number(row.divisible_count)},
            {"density", Value::decimal(to_decimal_string(row.empirical_density))},
            {"density_exact", Value::text(to_fraction_string(row.empirical_density))},
            {"lower_bound", Value::decimal(to_decimal_string(row.analytic_lower_bound))},
            {"lower_bound_exact", Value::text(to_fraction_string(row.analytic_lower_bound))},
        });
    }
    return kExitOk;
}

int cmd_verify(const Context& ctx, const std::string& n_text, const std::string& k_text, std::ostream& out,
               std::ostream& err) {
    const Natural n_max = parse_natural(n_text);
    const Natural k_max = parse_natural(k_text);
    const std::uint64_t bound = ctx.guard.value_or(oracle::kDefaultBound);
    if (n_max.value() > 0 && n_max.value() - 1 > bound)
        throw UsageError("oracle bound: n-max " + std::to_string(n_max.value()) + " exceeds " +
                         std::to_string(bound) + " + 1");

    const oracle::VerificationReport report = oracle::verify_range(n_max, k_max, bound);
    output::RecordWriter writer(out, ctx.format);
    writer.write({
        {"n_max", Value::number(n_max)},
        {"k_max", Value::number(k_max)},
        {"n_checked", Value::number(report.n_checked)},
        {"checks_performed", Value::number(report.checks_performed)},
        {"mismatches", Value::number(Natural{report.mismatches.size()})},
    });
    constexpr std::size_t kShown = 20;
    for (std::size_t i = 0; i < std::min(kShown, report.mismatches.size()); ++i) {
        const auto& m = report.mismatches[i];
        err << "mismatch: n=" << m.n << ' ' << m.check << " expected=" << m.expected << " actual=" << m.actual
            << '\n';
    }
    return report.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

Natural parse_natural(std::string_view text) {
    if (const auto caret = text.find('^'); caret != std::string_view::npos) {
        const std::uint64_t base = parse_decimal(text.substr(0, caret));
        const std::uint64_t exp = parse_decimal(text.substr(caret + 1));
        if (exp > 64) throw std::invalid_argument("exponent too large: '" + std::string(text) + "'");
        try {
            return checked_pow(base, static_cast<unsigned>(exp));
        } catch (const std::overflow_error&) {
            throw std::invalid_argument("value exceeds 64 bits: '" + std::string(text) + "'");
        }
    }
    return parse_decimal(text);
}

HalfOpenRange parse_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) throw std::invalid_argument("range must look like a..b: '" + std::string(text) + "'");
    HalfOpenRange r{parse_natural(text.substr(0, dots)), parse_natural(text.substr(dots + 2))};
    if (!(r.begin < r.end)) throw std::invalid_argument("empty or reversed range: '" + std::string(text) + "'");
    return r;
}

std::vector<Natural> parse_n_values(std::string_view text) {
    std::vector<Natural> out;
    for (const auto& [prefix, base] : {std::pair{std::string_view{"pow2:"}, 2u}, std::pair{std::string_view{"pow3:"}, 3u}}) {
        if (text.starts_with(prefix)) {
            const HalfOpenRange exps = parse_range(text.substr(prefix.size()));
            if (exps.end.value() > 64) throw std::invalid_argument("schedule exponent too large");
            for (std::uint64_t e = exps.begin.value(); e < exps.end.value(); ++e) {
                try {
                    out.push_back(checked_pow(Natural{base}, static_cast<unsigned>(e)));
                } catch (const std::overflow_error&) {
                    throw std::invalid_argument("schedule value exceeds 64 bits");
                }
            }
            return out;
        }
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(parse_natural(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Catalan numbers modulo 2^k and 3 from base-2/base-3 digits", "catmod"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--format", global.format, "Output format: csv or json-lines")
        ->check(CLI::IsMember({"csv", "json-lines"}));
    app.add_option("--threads", global.threads, "Worker threads for sweeps (0 = all cores)");
    app.add_option("--max-n-guard", global.max_n_guard,
                   "Ceiling on the n values a command may scan (density N, 2^t for census, verify n-max)");

    std::string classify_range;
    std::string classify_k;
    auto* classify = app.add_subcommand("classify", "Per-n valuation of C_n and residue mod 3");
    classify->add_option("range", classify_range, "Half-open range a..b")->required();
    classify->add_option("--k", classify_k, "Also report 2^k divisibility and the 2^(k-1) residue");

    std::string census_t;
    std::string census_k;
    bool census_enumerate = false;
    auto* census = app.add_subcommand("census", "Closed-form residue counts below 2^t");
    census->add_option("--t", census_t, "Exponent t: counts over n < 2^t")->required();
    census->add_option("--k", census_k, "Half-open k range a..b (default 0..t+1)");
    census->add_flag("--enumerate", census_enumerate, "Add enumerated ground truth");

    std::string density_n;
    std::string density_k;
    bool density_mod3 = false;
    auto* density = app.add_subcommand("density", "Empirical density of divisible C_n below N");
    density->add_option("limits", density_n, "N list (a,b,c) or schedule pow2:a..b / pow3:a..b")->required();
    density->add_option("--k", density_k, "Modulus 2^k");
    density->add_flag("--mod3", density_mod3, "Modulus 3");

    std::string verify_n;
    std::string verify_k = "8";
    auto* verify = app.add_subcommand("verify", "Check the digit classifiers against exact C_n");
    verify->add_option("--n-max", verify_n, "Check every n < n-max")->required();
    verify->add_option("--k-max", verify_k, "Check 2^k predicates for k = 1..k-max");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        Context ctx{output::parse_format(global.format), resolve_threads(global.threads), std::nullopt};
        if (!global.max_n_guard.empty()) ctx.guard = parse_natural(global.max_n_guard).value();

        if (classify->parsed()) return cmd_classify(ctx, classify_range, classify_k, out);
        if (census->parsed()) return cmd_census(ctx, census_t, census_k, census_enumerate, out, err);
        if (density->parsed()) return cmd_density(ctx, density_n, density_k, density_mod3, out);
        if (verify->parsed()) return cmd_verify(ctx, verify_n, verify_k, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace catmod::cli
