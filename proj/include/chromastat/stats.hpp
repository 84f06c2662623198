#ifndef CHROMASTAT_STATS_HPP
#define CHROMASTAT_STATS_HPP

#include <optional>
#include <string>
#include <vector>

#include "chromastat/coloring.hpp"
#include "chromastat/engine.hpp"
#include "chromastat/graph.hpp"
#include "chromastat/rational.hpp"

namespace chromastat {

// Exact p.m.f. over color indices 1..k: p(i) = theta(i)/n.
struct ColoringDistribution {
    int k = 0;
    long long n = 0;
    std::vector<Rational> probabilities;  // probabilities[i-1] = p(i)

    const Rational& p(int i) const { return probabilities[i - 1]; }
};

ColoringDistribution pmf(const LabeledColoring& coloring);

Rational mean(const ColoringDistribution& dist);

// r-th raw moment, r >= 1. moment(d, 1) == mean(d).
Rational moment(const ColoringDistribution& dist, int r);

// Standard variance E[X^2] - (E[X])^2, exact.
Rational variance(const ColoringDistribution& dist);

struct Classification {
    int k = 0;
    bool uniform = false;    // all p(i) = 1/k
    bool two_point = false;  // k == 2
    // "uniform(k)", "two_point", or "other"; uniform wins when both hold.
    std::string label() const;
};

Classification classify(const ColoringDistribution& dist);

enum class Ambiguity { no, yes, unknown };

const char* ambiguity_name(Ambiguity a);

// chi, both coloring-sum extremes, and the exact statistics of their
// canonical witness colorings.
struct ChromaticSummary {
    int chi = 0;
    long long omega_min = 0;
    long long omega_max = 0;
    Rational mean_chi;
    Rational var_chi;
    Rational mean_chi_plus;
    Rational var_chi_plus;
    LabeledColoring witness_min;
    LabeledColoring witness_max;
    // Set when another omega-optimal partition with a different class-size
    // multiset exists; the variance then depends on the witness choice.
    Ambiguity variance_ambiguous_chi = Ambiguity::unknown;
    Ambiguity variance_ambiguous_chi_plus = Ambiguity::unknown;
    std::optional<unsigned long long> optimal_partition_count_min;
    std::optional<unsigned long long> optimal_partition_count_max;
};

ChromaticSummary summarize(const Graph& g, const EngineOptions& options = {});

}  // namespace chromastat

#endif
