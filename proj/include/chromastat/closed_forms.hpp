#ifndef CHROMASTAT_CLOSED_FORMS_HPP
#define CHROMASTAT_CLOSED_FORMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "chromastat/engine.hpp"
#include "chromastat/families.hpp"
#include "chromastat/oracle.hpp"
#include "chromastat/rational.hpp"

namespace chromastat {

// `derived` carries the formulas that the search engine and the brute-force
// oracle confirm. `published` carries the values exactly as stated in the
// source propositions, kept for the errata report; several are misprints.
enum class FormulaVariant { derived, published };

const char* formula_variant_name(FormulaVariant v);

struct FamilyFormulaResult {
    FamilySpec spec;
    int chi = 0;
    FormulaVariant variant = FormulaVariant::derived;
    // Absent when the source states no closed form for this case
    // (published variant only; derived values are always present).
    std::optional<Rational> mean;
    std::optional<Rational> variance;
    std::vector<std::string> notes;
};

// Closed-form statistics under the minimum coloring sum. Throws
// std::invalid_argument below the family minimum or for unbalanced
// multipartite parts (the uniform result needs equal parts).
FamilyFormulaResult closed_form_chi(const FamilySpec& spec, FormulaVariant variant);

// Closed-form statistics under the maximum coloring sum.
FamilyFormulaResult closed_form_chi_plus(const FamilySpec& spec, FormulaVariant variant);

struct ReportRow {
    FamilySpec spec;
    std::string extreme;  // "chi" or "chi_plus"
    int chi = 0;
    bool skipped = false;
    std::string skip_reason;
    std::optional<Rational> engine_mean;
    std::optional<Rational> engine_variance;
    Rational derived_mean;
    Rational derived_variance;
    std::optional<Rational> published_mean;
    std::optional<Rational> published_variance;
    std::optional<bool> derived_matches_engine;    // absent when skipped
    std::optional<bool> published_matches_derived; // absent when nothing published
    bool published_variance_negative = false;
    std::vector<std::string> notes;
};

struct OrderingViolation {
    std::vector<int> sizes_by_color;  // theta(1..k) of the violating labeling
    Rational sigma_squared;
};

// Checks, by full enumeration of the chi-colorings, whether every labeling's
// mean and variance fall inside the [chi, chi_plus] witness interval. The
// mean ordering always holds; the variance ordering does not (odd cycles
// already break it), which is why it is reported rather than asserted.
struct OrderingCheck {
    FamilySpec spec;
    bool skipped = false;
    std::string skip_reason;
    bool mean_ordering_ok = true;
    bool variance_ordering_ok = true;
    Rational mean_chi, mean_chi_plus, var_chi, var_chi_plus;
    std::optional<OrderingViolation> variance_violation;
};

struct DiscrepancyReport {
    std::vector<ReportRow> rows;
    std::vector<OrderingCheck> ordering_checks;
};

struct ReportOptions {
    EngineOptions engine;
    OracleOptions oracle;
    // Ordering checks enumerate every chi-coloring; instances above this
    // size are marked skipped.
    int ordering_check_max_n = 8;
};

// One row per (instance, extreme): engine value, derived formula, published
// formula, match flags. Rows above the engine cap are marked skipped.
DiscrepancyReport discrepancy_report(const std::vector<FamilySpec>& instances,
                                     const ReportOptions& options = {});

// All instances of a family with total vertex count up to n_max, in a fixed
// deterministic order (bipartite: all m1 >= m2 >= 1; multipartite: all
// balanced part vectors with k >= 2).
std::vector<FamilySpec> family_sweep(Family family, int n_max);

}  // namespace chromastat

#endif
