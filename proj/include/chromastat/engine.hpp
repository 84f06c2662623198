#ifndef CHROMASTAT_ENGINE_HPP
#define CHROMASTAT_ENGINE_HPP

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "chromastat/coloring.hpp"
#include "chromastat/graph.hpp"

namespace chromastat {

struct EngineOptions {
    // Exact-only policy: instances above the cap are refused, never answered
    // heuristically.
    int max_vertices = 64;
};

// Deterministic DSATUR: pick the uncolored vertex with the most distinctly
// colored neighbors, ties by lowest vertex index; assign the smallest
// feasible color. The color count is an upper bound on chi.
LabeledColoring greedy_dsatur(const Graph& g);

// Size of a greedily grown clique; a lower bound on chi.
int clique_lower_bound(const Graph& g);

// Exact chromatic number via backtracking between the clique and DSATUR
// bounds. Throws SizeCapError above options.max_vertices.
int chromatic_number(const Graph& g, const EngineOptions& options = {});

// Yields every partition of V into exactly k nonempty independent sets,
// once per canonical partition (color-permutation symmetry broken by
// first-use class order). Requires k == chi(g); rejects anything else.
// The visitor may return false to stop early.
void enumerate_chi_partitions(const Graph& g, int k,
                              const std::function<bool(const ColorPartition&)>& visit,
                              const EngineOptions& options = {});

struct SumExtremeResult {
    LabeledColoring coloring;  // canonical witness, lex-least among ties
    long long omega = 0;
    // Number of distinct canonical partitions attaining the extreme.
    std::optional<unsigned long long> optimal_partition_count;
    // Class-size multisets (sorted descending) among the optimal partitions.
    std::set<std::vector<int>> optimal_size_multisets;
};

// Minimum coloring sum over all proper colorings with exactly chi(g) colors.
// Branch-and-bound over canonical partitions; ties kept so the multiset
// report is exhaustive.
SumExtremeResult min_sum_coloring(const Graph& g, const EngineOptions& options = {});

// Maximum counterpart, labeled size-ascending.
SumExtremeResult max_sum_coloring(const Graph& g, const EngineOptions& options = {});

}  // namespace chromastat

#endif
