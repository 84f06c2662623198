#include "chromastat/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "chromastat/errors.hpp"

namespace chromastat {

namespace {

void check_cap(const Graph& g, const OracleOptions& options) {
    if (g.vertex_count() > options.max_vertices) {
        throw SizeCapError(g.vertex_count(), options.max_vertices);
    }
}

bool proper(const Graph& g, const std::vector<int>& colors) {
    for (const auto& [u, v] : g.edges()) {
        if (colors[u] == colors[v]) return false;
    }
    return true;
}

bool surjective(const std::vector<int>& colors, int k) {
    std::vector<char> used(k, 0);
    for (int c : colors) used[c - 1] = 1;
    return std::all_of(used.begin(), used.end(), [](char u) { return u != 0; });
}

// Advances the color vector as a base-k counter (lowest vertex index is the
// least significant digit). Returns false once the counter wraps.
bool advance(std::vector<int>& colors, int k) {
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (colors[i] < k) {
            ++colors[i];
            std::fill(colors.begin(), colors.begin() + i, 1);
            return true;
        }
    }
    return false;
}

template <typename Visit>
void scan_colorings(const Graph& g, int k, Visit&& visit) {
    std::vector<int> colors(g.vertex_count(), 1);
    do {
        if (proper(g, colors) && surjective(colors, k)) {
            if (!visit(colors)) return;
        }
    } while (advance(colors, k));
}

}  // namespace

void enumerate_colorings(const Graph& g, int k,
                         const std::function<bool(const LabeledColoring&)>& visit,
                         const OracleOptions& options) {
    check_cap(g, options);
    if (k < 1 || k > g.vertex_count()) {
        throw std::invalid_argument("k must be in [1, n]");
    }
    scan_colorings(g, k, [&](const std::vector<int>& colors) {
        return visit(labeled_from_vertex_colors(colors));
    });
}

OracleSummary oracle_summary(const Graph& g, const OracleOptions& options) {
    check_cap(g, options);
    OracleSummary summary;
    const int n = g.vertex_count();
    for (int k = 1; k <= n; ++k) {
        bool found = false;
        long long omega_min = 0;
        long long omega_max = 0;
        std::set<std::vector<int>> multisets_min;
        std::set<std::vector<int>> multisets_max;
        unsigned long long count = 0;
        scan_colorings(g, k, [&](const std::vector<int>& colors) {
            // omega = sum over colors i of i*theta(i) = sum of vertex colors.
            long long omega = 0;
            std::vector<int> theta(k, 0);
            for (int c : colors) {
                omega += c;
                ++theta[c - 1];
            }
            std::sort(theta.begin(), theta.end(), std::greater<int>());
            if (!found || omega < omega_min) {
                omega_min = omega;
                multisets_min.clear();
                multisets_min.insert(theta);
            } else if (omega == omega_min) {
                multisets_min.insert(theta);
            }
            if (!found || omega > omega_max) {
                omega_max = omega;
                multisets_max.clear();
                multisets_max.insert(theta);
            } else if (omega == omega_max) {
                multisets_max.insert(theta);
            }
            found = true;
            ++count;
            return true;
        });
        if (found) {
            summary.chi = k;
            summary.omega_min = omega_min;
            summary.omega_max = omega_max;
            summary.optimal_size_multisets_min = std::move(multisets_min);
            summary.optimal_size_multisets_max = std::move(multisets_max);
            summary.coloring_count = count;
            return summary;
        }
    }
    throw std::logic_error("no proper coloring found; graph invariant violated");
}

}  // namespace chromastat
