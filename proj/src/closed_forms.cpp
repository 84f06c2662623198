#include "chromastat/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "chromastat/errors.hpp"
#include "chromastat/stats.hpp"

namespace chromastat {

namespace {

Rational frac(long long num, long long den) { return make_rational(num, den); }

FamilyFormulaResult base_result(const FamilySpec& spec, int chi, FormulaVariant variant) {
    FamilyFormulaResult r;
    r.spec = spec;
    r.chi = chi;
    r.variant = variant;
    return r;
}

void set(FamilyFormulaResult& r, Rational mean, Rational variance) {
    r.mean = std::move(mean);
    r.variance = std::move(variance);
}

// Bipartite sizes with m1 >= m2, shared by complete_bipartite and star.
std::pair<long long, long long> bipartite_sizes(const FamilySpec& spec) {
    if (spec.family == Family::star) {
        return {spec.n - 1, 1};
    }
    long long m1 = spec.parts[0];
    long long m2 = spec.parts[1];
    if (m1 < m2) std::swap(m1, m2);
    return {m1, m2};
}

bool balanced(const std::vector<int>& parts) {
    return std::all_of(parts.begin(), parts.end(),
                       [&](int m) { return m == parts.front(); });
}

FamilyFormulaResult complete_forms(const FamilySpec& spec, FormulaVariant variant, bool /*maximum*/) {
    // Every proper n-coloring of K_n is a bijection, so both extremes give
    // DU(n): mean (n+1)/2, variance (n^2-1)/12. The published values agree.
    long long n = spec.n;
    auto r = base_result(spec, spec.n, variant);
    set(r, frac(n + 1, 2), frac(n * n - 1, 12));
    return r;
}

FamilyFormulaResult path_forms(const FamilySpec& spec, FormulaVariant variant, bool maximum) {
    long long n = spec.n;
    auto r = base_result(spec, n == 1 ? 1 : 2, variant);
    if (n == 1) {
        if (variant == FormulaVariant::derived && maximum) {
            // The odd-n maximum formula (3n+1)/(2n) would give 2 here, but a
            // single vertex has the one-class coloring: mean 1, variance 0.
            set(r, frac(1, 1), frac(0, 1));
            r.notes.push_back("single vertex: one color class, so mean 1 and variance 0");
            return r;
        }
        // The minimum formulas and the published maximum formula all
        // evaluate to mean 1, variance 0 at n = 1.
        set(r, frac(1, 1), frac(0, 1));
        return r;
    }
    if (n % 2 == 0) {
        set(r, frac(3, 2), frac(1, 4));
        return r;
    }
    if (!maximum) {
        set(r, frac(3 * n - 1, 2 * n), frac(n * n - 1, 4 * n * n));
        return r;
    }
    if (variant == FormulaVariant::derived) {
        set(r, frac(3 * n + 1, 2 * n), frac(n * n - 1, 4 * n * n));
    } else {
        // Published maximum mean repeats the minimum mean (3n-1)/(2n); the
        // larger class must take color 2, which gives (3n+1)/(2n).
        set(r, frac(3 * n - 1, 2 * n), frac(n * n - 1, 4 * n * n));
        r.notes.push_back("published maximum mean repeats the minimum mean");
    }
    return r;
}

FamilyFormulaResult cycle_forms(const FamilySpec& spec, FormulaVariant variant, bool maximum) {
    long long n = spec.n;
    if (n % 2 == 0) {
        auto r = base_result(spec, 2, variant);
        set(r, frac(3, 2), frac(1, 4));
        return r;
    }
    auto r = base_result(spec, 3, variant);
    Rational var = frac(n * n + 8 * n - 9, 4 * n * n);
    if (!maximum) {
        if (variant == FormulaVariant::derived) {
            set(r, frac(3 * n + 3, 2 * n), var);
        } else {
            // Published variance has the middle terms sign-flipped:
            // (n^2-8n+9)/(4n^2), which is negative for n = 3 and n = 5.
            set(r, frac(3 * n + 3, 2 * n), frac(n * n - 8 * n + 9, 4 * n * n));
            r.notes.push_back("published variance (n^2-8n+9)/(4n^2) is negative for n <= 5");
        }
        return r;
    }
    set(r, frac(5 * n - 3, 2 * n), var);
    return r;
}

FamilyFormulaResult wheel_forms(const FamilySpec& spec, FormulaVariant variant, bool maximum) {
    long long n = spec.n;  // total vertices: hub + (n-1)-cycle rim
    if (n % 2 == 1) {
        // Odd order: even rim, chi = 3. Hub takes one color alone; the rim
        // statistics match the odd cycle on n vertices.
        auto r = base_result(spec, 3, variant);
        Rational var = frac(n * n + 8 * n - 9, 4 * n * n);
        if (!maximum) {
            set(r, frac(3 * n + 3, 2 * n), var);
        } else {
            if (variant == FormulaVariant::derived) {
                set(r, frac(5 * n - 3, 2 * n), var);
            } else {
                // Published maximum variance reads (n^2+30n-31)/(4n^2);
                // the class sizes are the same as the minimum case, so the
                // variance must match (n^2+8n-9)/(4n^2).
                set(r, frac(5 * n - 3, 2 * n), frac(n * n + 30 * n - 31, 4 * n * n));
                r.notes.push_back(
                    "published maximum variance disagrees with the minimum-case class sizes");
            }
        }
        return r;
    }
    // Even order: odd rim, chi = 4. Classes {hub} plus the odd-cycle rim
    // split ((n-2)/2, (n-2)/2, 1) -> sizes (1, (n-2)/2, (n-2)/2, 1) in some
    // label order.
    auto r = base_result(spec, 4, variant);
    Rational var = frac(n * n + 32 * n - 64, 4 * n * n);
    Rational mean = maximum ? frac(7 * n - 8, 2 * n) : frac(3 * n + 8, 2 * n);
    if (variant == FormulaVariant::derived) {
        set(r, mean, var);
    } else {
        // Published even-order mean reads (3n+1)/(2n+2) for both extremes;
        // it does not reproduce the n = 4 case K_4 (mean 5/2).
        set(r, frac(3 * n + 1, 2 * n + 2), var);
        r.notes.push_back("published even-order mean (3n+1)/(2n+2) fails already at n = 4 (K_4)");
    }
    return r;
}

FamilyFormulaResult bipartite_forms(const FamilySpec& spec, FormulaVariant variant, bool maximum) {
    auto [m1, m2] = bipartite_sizes(spec);
    long long n = m1 + m2;
    auto r = base_result(spec, 2, variant);
    Rational mean = maximum ? frac(n + m1, n) : frac(n + m2, n);
    Rational var = frac(m1 * m2, n * n);
    if (variant == FormulaVariant::derived) {
        set(r, mean, var);
        return r;
    }
    if (m1 == m2) {
        // Balanced case: DU(2) for both extremes, stated correctly.
        set(r, frac(3, 2), frac(1, 4));
        return r;
    }
    if (maximum) {
        // No closed form is published for the unbalanced maximum case.
        r.notes.push_back("no published closed form for the unbalanced maximum case");
        return r;
    }
    // Published variance reads ((n-1)m1 + 2(2n-1)m2)/n^2, which is not even
    // bounded by the two-point maximum 1/4 (e.g. 23/16 for the star K_{1,3});
    // expanding E[X^2] - E[X]^2 gives m1*m2/n^2.
    set(r, mean, frac((n - 1) * m1 + 2 * (2 * n - 1) * m2, n * n));
    r.notes.push_back("published variance exceeds the two-point bound 1/4 whenever m1 != m2");
    return r;
}

FamilyFormulaResult multipartite_forms(const FamilySpec& spec, FormulaVariant variant,
                                       bool /*maximum*/) {
    if (!balanced(spec.parts)) {
        throw std::invalid_argument(
            "closed form requires balanced multipartite parts; got " + spec.name());
    }
    // k balanced parts: every optimal coloring uses the k parts as classes,
    // all the same size, so both extremes give DU(k). The published
    // statement agrees on this case.
    long long k = static_cast<long long>(spec.parts.size());
    auto r = base_result(spec, static_cast<int>(k), variant);
    set(r, frac(k + 1, 2), frac(k * k - 1, 12));
    return r;
}

FamilyFormulaResult closed_form(const FamilySpec& spec, FormulaVariant variant, bool maximum) {
    check_family_spec(spec);
    switch (spec.family) {
        case Family::complete:
            return complete_forms(spec, variant, maximum);
        case Family::path:
            return path_forms(spec, variant, maximum);
        case Family::cycle:
            return cycle_forms(spec, variant, maximum);
        case Family::wheel:
            return wheel_forms(spec, variant, maximum);
        case Family::complete_bipartite:
        case Family::star:
            return bipartite_forms(spec, variant, maximum);
        case Family::complete_multipartite:
            return multipartite_forms(spec, variant, maximum);
    }
    throw std::invalid_argument("unknown family");
}

void fill_published(ReportRow& row, const FamilyFormulaResult& published) {
    row.published_mean = published.mean;
    row.published_variance = published.variance;
    for (const auto& note : published.notes) row.notes.push_back(note);
    if (published.mean && published.variance) {
        row.published_matches_derived =
            *published.mean == row.derived_mean && *published.variance == row.derived_variance;
        row.published_variance_negative = *published.variance < 0;
    }
}

ReportRow make_row(const FamilySpec& spec, bool maximum, const EngineOptions& engine_options) {
    ReportRow row;
    row.spec = spec;
    row.extreme = maximum ? "chi_plus" : "chi";
    FamilyFormulaResult derived = closed_form(spec, FormulaVariant::derived, maximum);
    FamilyFormulaResult published = closed_form(spec, FormulaVariant::published, maximum);
    row.chi = derived.chi;
    row.derived_mean = *derived.mean;
    row.derived_variance = *derived.variance;
    for (const auto& note : derived.notes) row.notes.push_back(note);
    fill_published(row, published);

    Graph g = generate_family(spec);
    try {
        SumExtremeResult extreme =
            maximum ? max_sum_coloring(g, engine_options) : min_sum_coloring(g, engine_options);
        ColoringDistribution dist = pmf(extreme.coloring);
        row.engine_mean = mean(dist);
        row.engine_variance = variance(dist);
        row.derived_matches_engine =
            *row.engine_mean == row.derived_mean && *row.engine_variance == row.derived_variance;
    } catch (const SizeCapError& e) {
        row.skipped = true;
        row.skip_reason = e.what();
    }
    return row;
}

OrderingCheck make_ordering_check(const FamilySpec& spec, const ReportOptions& options) {
    OrderingCheck check;
    check.spec = spec;
    Graph g = generate_family(spec);
    if (g.vertex_count() > options.ordering_check_max_n) {
        check.skipped = true;
        check.skip_reason = "instance larger than ordering check limit of " +
                            std::to_string(options.ordering_check_max_n) + " vertices";
        return check;
    }
    ChromaticSummary summary;
    try {
        summary = summarize(g, options.engine);
    } catch (const SizeCapError& e) {
        check.skipped = true;
        check.skip_reason = e.what();
        return check;
    }
    check.mean_chi = summary.mean_chi;
    check.mean_chi_plus = summary.mean_chi_plus;
    check.var_chi = summary.var_chi;
    check.var_chi_plus = summary.var_chi_plus;

    OracleOptions oracle_options = options.oracle;
    oracle_options.max_vertices = std::max(oracle_options.max_vertices, g.vertex_count());
    std::optional<OrderingViolation> worst_high;
    std::optional<OrderingViolation> worst_low;
    enumerate_colorings(
        g, summary.chi,
        [&](const LabeledColoring& coloring) {
            ColoringDistribution dist = pmf(coloring);
            Rational mu = mean(dist);
            Rational sigma2 = variance(dist);
            if (mu < check.mean_chi || mu > check.mean_chi_plus) {
                check.mean_ordering_ok = false;
            }
            if (sigma2 > check.var_chi_plus) {
                check.variance_ordering_ok = false;
                if (!worst_high || sigma2 > worst_high->sigma_squared) {
                    worst_high = OrderingViolation{coloring.theta(), sigma2};
                }
            } else if (sigma2 < check.var_chi) {
                check.variance_ordering_ok = false;
                if (!worst_low || sigma2 < worst_low->sigma_squared) {
                    worst_low = OrderingViolation{coloring.theta(), sigma2};
                }
            }
            return true;
        },
        oracle_options);
    check.variance_violation = worst_high ? worst_high : worst_low;
    return check;
}

}  // namespace

const char* formula_variant_name(FormulaVariant v) {
    return v == FormulaVariant::derived ? "derived" : "published";
}

FamilyFormulaResult closed_form_chi(const FamilySpec& spec, FormulaVariant variant) {
    return closed_form(spec, variant, /*maximum=*/false);
}

FamilyFormulaResult closed_form_chi_plus(const FamilySpec& spec, FormulaVariant variant) {
    return closed_form(spec, variant, /*maximum=*/true);
}

DiscrepancyReport discrepancy_report(const std::vector<FamilySpec>& instances,
                                     const ReportOptions& options) {
    DiscrepancyReport report;
    for (const FamilySpec& spec : instances) {
        report.rows.push_back(make_row(spec, /*maximum=*/false, options.engine));
        report.rows.push_back(make_row(spec, /*maximum=*/true, options.engine));
    }
    for (const FamilySpec& spec : instances) {
        report.ordering_checks.push_back(make_ordering_check(spec, options));
    }
    return report;
}

std::vector<FamilySpec> family_sweep(Family family, int n_max) {
    std::vector<FamilySpec> out;
    auto add_sized = [&](int n_min) {
        for (int n = n_min; n <= n_max; ++n) out.push_back(FamilySpec::sized(family, n));
    };
    switch (family) {
        case Family::complete:
        case Family::path:
            add_sized(1);
            break;
        case Family::cycle:
            add_sized(3);
            break;
        case Family::wheel:
            add_sized(4);
            break;
        case Family::star:
            add_sized(2);
            break;
        case Family::complete_bipartite:
            for (int total = 2; total <= n_max; ++total) {
                for (int m2 = 1; 2 * m2 <= total; ++m2) {
                    out.push_back(FamilySpec::partite(family, {total - m2, m2}));
                }
            }
            break;
        case Family::complete_multipartite:
            for (int total = 2; total <= n_max; ++total) {
                for (int k = 2; k <= total; ++k) {
                    if (total % k != 0) continue;
                    out.push_back(
                        FamilySpec::partite(family, std::vector<int>(k, total / k)));
                }
            }
            break;
    }
    return out;
}

}  // namespace chromastat
