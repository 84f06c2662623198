#include "chromastat/engine.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "chromastat/errors.hpp"

namespace chromastat {

namespace {

using Bitset = boost::dynamic_bitset<>;

void check_cap(const Graph& g, const EngineOptions& options) {
    if (g.vertex_count() > options.max_vertices) {
        throw SizeCapError(g.vertex_count(), options.max_vertices);
    }
}

std::vector<Bitset> adjacency_masks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Bitset> adj(n, Bitset(n));
    for (const auto& [u, v] : g.edges()) {
        adj[u].set(v);
        adj[v].set(u);
    }
    return adj;
}

// Is a proper coloring with at most k colors possible? Backtracking with
// first-use symmetry breaking over a degree-descending static vertex order.
bool k_colorable(const Graph& g, int k) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    std::vector<int> color(n, 0);  // 0 = unassigned, else 1..k
    auto assign = [&](auto&& self, int pos) -> bool {
        if (pos == n) return true;
        int v = order[pos];
        int max_used = 0;
        for (int i = 0; i < pos; ++i) max_used = std::max(max_used, color[order[i]]);
        int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            bool ok = true;
            for (int w : g.neighbors(v)) {
                if (color[w] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            color[v] = c;
            if (self(self, pos + 1)) return true;
            color[v] = 0;
        }
        return false;
    };
    return assign(assign, 0);
}

// Core backtracking over partitions into exactly k independent classes.
// Vertices are placed in index order; a vertex may join any open compatible
// class or open the next class, so each unordered partition is produced
// exactly once. `prune(sizes, opened, remaining)` may cut a subtree;
// `emit(classes)` receives each complete partition and returns false to stop.
template <typename Prune, typename Emit>
void partition_search(const Graph& g, int k, Prune&& prune, Emit&& emit) {
    const int n = g.vertex_count();
    if (k < 1 || k > n) return;
    const std::vector<Bitset> adj = adjacency_masks(g);

    std::vector<std::vector<int>> classes(k);
    std::vector<Bitset> members(k, Bitset(n));
    std::vector<int> sizes(k, 0);
    bool stopped = false;

    auto place = [&](auto&& self, int v, int opened) -> void {
        if (stopped) return;
        const int remaining = n - v;
        const int unopened = k - opened;
        if (remaining < unopened) return;  // cannot reach k nonempty classes
        if (v == n) {
            if (!emit(classes)) stopped = true;
            return;
        }
        if (prune(sizes, opened, remaining)) return;
        for (int c = 0; c < opened; ++c) {
            if (adj[v].intersects(members[c])) continue;
            classes[c].push_back(v);
            members[c].set(v);
            ++sizes[c];
            self(self, v + 1, opened);
            --sizes[c];
            members[c].reset(v);
            classes[c].pop_back();
            if (stopped) return;
        }
        if (opened < k) {
            classes[opened].push_back(v);
            members[opened].set(v);
            sizes[opened] = 1;
            self(self, v + 1, opened + 1);
            sizes[opened] = 0;
            members[opened].reset(v);
            classes[opened].pop_back();
        }
    };
    place(place, 0, 0);
}

// Smallest coloring sum reachable from a partial partition, ignoring
// independence constraints: all free mass on the largest class, one vertex
// for each class still to open. Sum with size-descending labels.
long long optimistic_min_omega(const std::vector<int>& sizes, int opened, int remaining,
                               int k, std::vector<long long>& scratch) {
    const int unopened = k - opened;
    scratch.clear();
    for (int c = 0; c < opened; ++c) scratch.push_back(sizes[c]);
    for (int i = 0; i < unopened; ++i) scratch.push_back(1);
    auto largest = std::max_element(scratch.begin(), scratch.end());
    *largest += remaining - unopened;
    std::sort(scratch.begin(), scratch.end(), std::greater<long long>());
    long long omega = 0;
    for (std::size_t i = 0; i < scratch.size(); ++i) {
        omega += static_cast<long long>(i + 1) * scratch[i];
    }
    return omega;
}

struct ExtremeSearchState {
    bool maximize = false;
    long long n_times_k1 = 0;  // (k+1)*n, for the min<->max label duality
    long long best_omega = 0;
    bool have_best = false;
    ColorPartition best_partition;
    unsigned long long count = 0;
    std::set<std::vector<int>> multisets;
};

SumExtremeResult sum_extreme_search(const Graph& g, bool maximize,
                                    const EngineOptions& options) {
    check_cap(g, options);
    const int n = g.vertex_count();
    const int k = chromatic_number(g, options);

    ExtremeSearchState st;
    st.maximize = maximize;
    st.n_times_k1 = static_cast<long long>(k + 1) * n;
    std::vector<long long> scratch;

    partition_search(
        g, k,
        [&](const std::vector<int>& sizes, int opened, int remaining) {
            if (!st.have_best) return false;
            long long bound = optimistic_min_omega(sizes, opened, remaining, k, scratch);
            if (st.maximize) {
                // Best omega under size-ascending labels is (k+1)n minus the
                // size-descending sum, so the same optimistic shape bounds
                // both directions.
                return st.n_times_k1 - bound < st.best_omega;
            }
            return bound > st.best_omega;
        },
        [&](const std::vector<std::vector<int>>& classes) {
            ColorPartition p = make_canonical_partition(classes);
            LabeledColoring labeled = maximize ? label_for_max(p) : label_for_min(p);
            long long omega = coloring_sum(labeled);
            bool better = !st.have_best ||
                          (maximize ? omega > st.best_omega : omega < st.best_omega);
            if (better) {
                st.best_omega = omega;
                st.best_partition = std::move(p);
                st.count = 1;
                st.multisets.clear();
                st.multisets.insert(st.best_partition.class_sizes());
                st.have_best = true;
            } else if (omega == st.best_omega) {
                ++st.count;
                st.multisets.insert(p.class_sizes());
                if (partition_less(p, st.best_partition)) {
                    st.best_partition = std::move(p);
                }
            }
            return true;
        });

    if (!st.have_best) {
        throw std::logic_error("no chi-partition found; chromatic number inconsistent");
    }
    SumExtremeResult result;
    result.coloring =
        maximize ? label_for_max(st.best_partition) : label_for_min(st.best_partition);
    result.omega = st.best_omega;
    result.optimal_partition_count = st.count;
    result.optimal_size_multisets = std::move(st.multisets);
    return result;
}

}  // namespace

LabeledColoring greedy_dsatur(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, 0);
    std::vector<Bitset> neighbor_colors(n, Bitset(n + 1));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        std::size_t best_sat = 0;
        for (int v = 0; v < n; ++v) {
            if (color[v] != 0) continue;
            std::size_t sat = neighbor_colors[v].count();
            if (best == -1 || sat > best_sat) {
                best = v;
                best_sat = sat;
            }
        }
        int c = 1;
        while (neighbor_colors[best].test(c)) ++c;
        color[best] = c;
        for (int w : g.neighbors(best)) neighbor_colors[w].set(c);
    }
    return labeled_from_vertex_colors(color);
}

int clique_lower_bound(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> by_degree(n);
    for (int v = 0; v < n; ++v) by_degree[v] = v;
    std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    int best = 0;
    std::vector<int> clique;
    for (int seed : by_degree) {
        clique.assign(1, seed);
        for (int v : by_degree) {
            if (v == seed) continue;
            bool adjacent_to_all = true;
            for (int u : clique) {
                if (!g.has_edge(u, v)) {
                    adjacent_to_all = false;
                    break;
                }
            }
            if (adjacent_to_all) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

int chromatic_number(const Graph& g, const EngineOptions& options) {
    check_cap(g, options);
    const int upper = greedy_dsatur(g).k();
    const int lower = clique_lower_bound(g);
    for (int k = lower; k < upper; ++k) {
        if (k_colorable(g, k)) return k;
    }
    return upper;
}

void enumerate_chi_partitions(const Graph& g, int k,
                              const std::function<bool(const ColorPartition&)>& visit,
                              const EngineOptions& options) {
    const int chi = chromatic_number(g, options);
    if (k != chi) {
        throw std::invalid_argument("k = " + std::to_string(k) +
                                    " does not equal the chromatic number " +
                                    std::to_string(chi));
    }
    partition_search(
        g, k, [](const std::vector<int>&, int, int) { return false; },
        [&](const std::vector<std::vector<int>>& classes) {
            return visit(make_canonical_partition(classes));
        });
}

SumExtremeResult min_sum_coloring(const Graph& g, const EngineOptions& options) {
    return sum_extreme_search(g, false, options);
}

SumExtremeResult max_sum_coloring(const Graph& g, const EngineOptions& options) {
    return sum_extreme_search(g, true, options);
}

}  // namespace chromastat
