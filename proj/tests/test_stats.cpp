#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "chromastat/coloring.hpp"
#include "chromastat/engine.hpp"
#include "chromastat/families.hpp"
#include "chromastat/oracle.hpp"
#include "chromastat/random_graph.hpp"
#include "chromastat/rational.hpp"
#include "chromastat/stats.hpp"

using namespace chromastat;

namespace {

LabeledColoring coloring_from(std::vector<std::vector<int>> classes, std::vector<int> labels) {
    return LabeledColoring{make_canonical_partition(std::move(classes)), std::move(labels)};
}

}  // namespace

TEST_CASE("pmf matches the documented distributions") {
    LabeledColoring p4 = coloring_from({{0, 2}, {1, 3}}, {1, 2});
    ColoringDistribution dp4 = pmf(p4);
    CHECK(dp4.k == 2);
    CHECK(dp4.n == 4);
    CHECK(dp4.p(1) == make_rational(1, 2));
    CHECK(dp4.p(2) == make_rational(1, 2));

    LabeledColoring c5 = coloring_from({{0, 2}, {1, 3}, {4}}, {1, 2, 3});
    ColoringDistribution dc5 = pmf(c5);
    CHECK(dc5.p(1) == make_rational(2, 5));
    CHECK(dc5.p(2) == make_rational(2, 5));
    CHECK(dc5.p(3) == make_rational(1, 5));

    LabeledColoring k3 = coloring_from({{0}, {1}, {2}}, {1, 2, 3});
    for (int i = 1; i <= 3; ++i) CHECK(pmf(k3).p(i) == make_rational(1, 3));
}

TEST_CASE("mean, moment, and variance on the documented examples") {
    ColoringDistribution half = pmf(coloring_from({{0, 2}, {1, 3}}, {1, 2}));
    CHECK(mean(half) == make_rational(3, 2));
    CHECK(moment(half, 1) == mean(half));
    CHECK(moment(half, 2) == make_rational(5, 2));
    CHECK(variance(half) == make_rational(1, 4));

    ColoringDistribution thirds = pmf(coloring_from({{0}, {1}, {2}}, {1, 2, 3}));
    CHECK(moment(thirds, 2) == make_rational(14, 3));

    ColoringDistribution c5 = pmf(coloring_from({{0, 2}, {1, 3}, {4}}, {1, 2, 3}));
    CHECK(mean(c5) == make_rational(9, 5));
    CHECK(variance(c5) == make_rational(14, 25));

    // DU(n) for K_n: mean (n+1)/2, variance (n^2-1)/12.
    for (int n = 1; n <= 8; ++n) {
        std::vector<std::vector<int>> classes;
        std::vector<int> labels;
        for (int v = 0; v < n; ++v) {
            classes.push_back({v});
            labels.push_back(v + 1);
        }
        ColoringDistribution d = pmf(coloring_from(classes, labels));
        CHECK(mean(d) == make_rational(n + 1, 2));
        CHECK(variance(d) == make_rational(static_cast<long long>(n) * n - 1, 12));
    }

    CHECK_THROWS_AS(moment(half, 0), std::invalid_argument);
    CHECK_THROWS_AS(moment(half, -2), std::invalid_argument);
}

TEST_CASE("classify distinguishes uniform, two-point, and other") {
    Classification k3 = classify(pmf(coloring_from({{0}, {1}, {2}}, {1, 2, 3})));
    CHECK(k3.uniform);
    CHECK_FALSE(k3.two_point);
    CHECK(k3.label() == "uniform(3)");

    Classification unbalanced = classify(pmf(coloring_from({{0, 1, 2}, {3}}, {1, 2})));
    CHECK(unbalanced.two_point);
    CHECK_FALSE(unbalanced.uniform);
    CHECK(unbalanced.label() == "two_point");

    // Balanced bipartition is both; the uniform label wins.
    Classification balanced = classify(pmf(coloring_from({{0, 2}, {1, 3}}, {1, 2})));
    CHECK(balanced.two_point);
    CHECK(balanced.uniform);
    CHECK(balanced.label() == "uniform(2)");

    Classification other = classify(pmf(coloring_from({{0, 2}, {1, 3}, {4}}, {1, 2, 3})));
    CHECK_FALSE(other.uniform);
    CHECK_FALSE(other.two_point);
    CHECK(other.label() == "other");

    Classification single = classify(pmf(coloring_from({{0}}, {1})));
    CHECK(single.label() == "uniform(1)");
}

TEST_CASE("pmf invariants on random colorings") {
    for (int n = 2; n <= 8; ++n) {
        for (std::uint64_t t = 0; t < 4; ++t) {
            Graph g = random_connected_graph(
                n, mix_seed(77, (static_cast<std::uint64_t>(n) << 32) | t), t % 5 + 1, 6);
            int k = chromatic_number(g);
            enumerate_chi_partitions(g, k, [&](const ColorPartition& p) {
                LabeledColoring lo = label_for_min(p);
                ColoringDistribution d = pmf(lo);
                Rational total;
                for (int i = 1; i <= d.k; ++i) {
                    CHECK(d.p(i) > 0);
                    total += d.p(i);
                }
                CHECK(total == 1);
                CHECK(mean(d) * n == coloring_sum(lo));
                CHECK(variance(d) >= 0);
                if (k == 1) CHECK(variance(d) == 0);
                if (k > 1) CHECK(variance(d) > 0);

                // Label reversal preserves variance and reflects the mean.
                LabeledColoring hi = label_for_max(p);
                ColoringDistribution dh = pmf(hi);
                CHECK(variance(dh) == variance(d));
                CHECK(mean(dh) == make_rational(k + 1) - mean(d));
                return true;
            });
        }
    }
}

TEST_CASE("summarize on the hand-checked instances") {
    ChromaticSummary k4 = summarize(generate_family(FamilySpec::sized(Family::complete, 4)));
    CHECK(k4.chi == 4);
    CHECK(k4.mean_chi == make_rational(5, 2));
    CHECK(k4.var_chi == make_rational(5, 4));
    CHECK(k4.mean_chi_plus == k4.mean_chi);
    CHECK(k4.var_chi_plus == k4.var_chi);

    ChromaticSummary c5 = summarize(generate_family(FamilySpec::sized(Family::cycle, 5)));
    CHECK(c5.chi == 3);
    CHECK(c5.omega_min == 9);
    CHECK(c5.omega_max == 11);
    CHECK(c5.mean_chi == make_rational(9, 5));
    CHECK(c5.var_chi == make_rational(14, 25));
    CHECK(c5.mean_chi_plus == make_rational(11, 5));
    CHECK(c5.var_chi_plus == make_rational(14, 25));
    CHECK(c5.variance_ambiguous_chi == Ambiguity::no);
    CHECK(c5.variance_ambiguous_chi_plus == Ambiguity::no);

    ChromaticSummary w5 = summarize(generate_family(FamilySpec::sized(Family::wheel, 5)));
    CHECK(w5.chi == 3);
    CHECK(w5.mean_chi == make_rational(9, 5));
    CHECK(w5.var_chi == make_rational(14, 25));

    ChromaticSummary star = summarize(generate_family(FamilySpec::sized(Family::star, 4)));
    CHECK(star.chi == 2);
    CHECK(star.mean_chi == make_rational(5, 4));
    CHECK(star.var_chi == make_rational(3, 16));
    CHECK(star.mean_chi_plus == make_rational(7, 4));
    CHECK(star.var_chi_plus == make_rational(3, 16));
}

TEST_CASE("summarize invariants: mean = omega/n and the mean ordering") {
    for (int n = 2; n <= 7; ++n) {
        for (std::uint64_t t = 0; t < 4; ++t) {
            Graph g = random_connected_graph(
                n, mix_seed(31, (static_cast<std::uint64_t>(n) << 32) | t), t % 5 + 1, 6);
            ChromaticSummary s = summarize(g);
            CHECK(s.mean_chi == make_rational(s.omega_min, n));
            CHECK(s.mean_chi_plus == make_rational(s.omega_max, n));
            CHECK(s.mean_chi <= s.mean_chi_plus);
            CHECK(s.var_chi >= 0);
            CHECK(s.var_chi_plus >= 0);

            // Every labeling of every chi-partition has mean inside the band.
            enumerate_colorings(g, s.chi, [&](const LabeledColoring& c) {
                Rational mu = mean(pmf(c));
                CHECK(s.mean_chi <= mu);
                CHECK(mu <= s.mean_chi_plus);
                return true;
            });
        }
    }
}

TEST_CASE("ambiguity flag reflects multiple optimal size multisets") {
    // K1,3: the bipartition {leaves},{hub} is the unique chi-partition.
    ChromaticSummary star = summarize(generate_family(FamilySpec::sized(Family::star, 4)));
    CHECK(star.variance_ambiguous_chi == Ambiguity::no);
    CHECK(star.optimal_partition_count_min.has_value());
    CHECK(*star.optimal_partition_count_min == 1);

    // C5 has 5 optimal partitions but a single size multiset {2,2,1}.
    ChromaticSummary c5 = summarize(generate_family(FamilySpec::sized(Family::cycle, 5)));
    CHECK(*c5.optimal_partition_count_min == 5);
    CHECK(c5.variance_ambiguous_chi == Ambiguity::no);
}
