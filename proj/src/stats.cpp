#include "chromastat/stats.hpp"

#include <stdexcept>

namespace chromastat {

ColoringDistribution pmf(const LabeledColoring& coloring) {
    ColoringDistribution dist;
    dist.k = coloring.k();
    dist.n = coloring.vertex_count();
    dist.probabilities.reserve(dist.k);
    for (int count : coloring.theta()) {
        dist.probabilities.emplace_back(BigInt(count), BigInt(dist.n));
    }
    return dist;
}

Rational mean(const ColoringDistribution& dist) {
    Rational total = 0;
    for (int i = 1; i <= dist.k; ++i) {
        total += Rational(i) * dist.p(i);
    }
    return total;
}

Rational moment(const ColoringDistribution& dist, int r) {
    if (r < 1) {
        throw std::invalid_argument("moment order must be a positive integer");
    }
    Rational total = 0;
    for (int i = 1; i <= dist.k; ++i) {
        BigInt power = boost::multiprecision::pow(BigInt(i), static_cast<unsigned>(r));
        total += Rational(power) * dist.p(i);
    }
    return total;
}

Rational variance(const ColoringDistribution& dist) {
    Rational mu = mean(dist);
    return moment(dist, 2) - mu * mu;
}

std::string Classification::label() const {
    if (uniform) return "uniform(" + std::to_string(k) + ")";
    if (two_point) return "two_point";
    return "other";
}

Classification classify(const ColoringDistribution& dist) {
    Classification c;
    c.k = dist.k;
    c.two_point = dist.k == 2;
    Rational even_share(BigInt(1), BigInt(dist.k));
    c.uniform = true;
    for (int i = 1; i <= dist.k; ++i) {
        if (dist.p(i) != even_share) {
            c.uniform = false;
            break;
        }
    }
    return c;
}

const char* ambiguity_name(Ambiguity a) {
    switch (a) {
        case Ambiguity::no: return "no";
        case Ambiguity::yes: return "yes";
        case Ambiguity::unknown: return "unknown";
    }
    return "unknown";
}

ChromaticSummary summarize(const Graph& g, const EngineOptions& options) {
    ChromaticSummary summary;
    summary.chi = chromatic_number(g, options);

    SumExtremeResult lo = min_sum_coloring(g, options);
    SumExtremeResult hi = max_sum_coloring(g, options);

    summary.omega_min = lo.omega;
    summary.omega_max = hi.omega;

    ColoringDistribution dist_min = pmf(lo.coloring);
    ColoringDistribution dist_max = pmf(hi.coloring);
    summary.mean_chi = mean(dist_min);
    summary.var_chi = variance(dist_min);
    summary.mean_chi_plus = mean(dist_max);
    summary.var_chi_plus = variance(dist_max);

    summary.variance_ambiguous_chi =
        lo.optimal_size_multisets.size() > 1 ? Ambiguity::yes : Ambiguity::no;
    summary.variance_ambiguous_chi_plus =
        hi.optimal_size_multisets.size() > 1 ? Ambiguity::yes : Ambiguity::no;

    summary.optimal_partition_count_min = lo.optimal_partition_count;
    summary.optimal_partition_count_max = hi.optimal_partition_count;
    summary.witness_min = std::move(lo.coloring);
    summary.witness_max = std::move(hi.coloring);
    return summary;
}

}  // namespace chromastat
