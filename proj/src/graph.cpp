#include "chromastat/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chromastat {

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> vertex_labels)
    : n_(n), labels_(std::move(vertex_labels)) {
    if (n < 1) {
        throw std::invalid_argument("graph needs at least one vertex, got " +
                                    std::to_string(n));
    }
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
        throw std::invalid_argument("vertex label count does not match vertex count");
    }
    for (auto& [u, v] : edges) {
        if (u == v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        }
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw std::invalid_argument("edge endpoint out of range: " +
                                        std::to_string(u) + " " + std::to_string(v));
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Diagnostics validate(const Graph& g) {
    const int n = g.vertex_count();
    Diagnostics d;
    d.min_degree = n > 0 ? g.degree(0) : 0;
    d.max_degree = 0;
    for (int v = 0; v < n; ++v) {
        d.min_degree = std::min(d.min_degree, g.degree(v));
        d.max_degree = std::max(d.max_degree, g.degree(v));
    }

    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        ++d.component_count;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    d.connected = d.component_count == 1;
    return d;
}

}  // namespace chromastat
