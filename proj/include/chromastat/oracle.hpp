#ifndef CHROMASTAT_ORACLE_HPP
#define CHROMASTAT_ORACLE_HPP

#include <functional>
#include <set>
#include <vector>

#include "chromastat/coloring.hpp"
#include "chromastat/graph.hpp"

namespace chromastat {

// Deliberately naive ground truth. Shares only the Graph type and the
// labeled-coloring containers with the search engine; enumeration is a plain
// base-k counter over vertex index order with a full properness check.
struct OracleOptions {
    int max_vertices = 10;
};

struct OracleSummary {
    int chi = 0;
    long long omega_min = 0;
    long long omega_max = 0;
    // Class-size multisets (sorted descending) attaining each extreme.
    std::set<std::vector<int>> optimal_size_multisets_min;
    std::set<std::vector<int>> optimal_size_multisets_max;
    // Total surjective proper chi-colorings.
    unsigned long long coloring_count = 0;
};

// Yields every proper surjective function V -> {1..k}, exactly once, in
// base-k counter order. The visitor may return false to stop early.
void enumerate_colorings(const Graph& g, int k,
                         const std::function<bool(const LabeledColoring&)>& visit,
                         const OracleOptions& options = {});

// chi found by trying k = 1, 2, ... until a proper surjective coloring
// exists; omega extremes and optimal multisets by full scan at k = chi.
OracleSummary oracle_summary(const Graph& g, const OracleOptions& options = {});

}  // namespace chromastat

#endif
