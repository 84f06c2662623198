#ifndef CHROMASTAT_GRAPH_HPP
#define CHROMASTAT_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

namespace chromastat {

// Simple undirected graph on dense 0-based vertices. Immutable after
// construction; duplicate edges collapse, self-loops are rejected.
class Graph {
public:
    using Edge = std::pair<int, int>;  // normalized u < v

    explicit Graph(int n, std::vector<Edge> edges = {},
                   std::vector<std::string> vertex_labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Sorted, normalized (u < v), lexicographically ordered.
    const std::vector<Edge>& edges() const { return edges_; }

    // Sorted neighbor list.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const;

    // Original input labels, index -> label. Empty when labels are the
    // identity (generated graphs, 0-based edge lists).
    const std::vector<std::string>& vertex_labels() const { return labels_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

struct Diagnostics {
    bool connected = false;
    int component_count = 0;
    int min_degree = 0;
    int max_degree = 0;
};

// Connectivity and degree report. Downstream operations accept disconnected
// graphs; callers may warn since most published results assume connectivity.
Diagnostics validate(const Graph& g);

}  // namespace chromastat

#endif
