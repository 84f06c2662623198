#include "chromastat/random_graph.hpp"

#include <stdexcept>
#include <vector>

namespace chromastat {

std::uint64_t DeterministicRng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    // Reject the low partial block so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + (stream + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Graph random_connected_graph(int n, std::uint64_t seed, std::uint64_t edge_num,
                             std::uint64_t edge_den) {
    if (n < 1) throw std::invalid_argument("vertex count must be positive");
    if (edge_den == 0 || edge_num > edge_den) {
        throw std::invalid_argument("edge probability must be a fraction in [0, 1]");
    }
    DeterministicRng rng(seed);
    std::vector<Graph::Edge> edges;
    for (int v = 1; v < n; ++v) {
        edges.push_back({static_cast<int>(rng.below(static_cast<std::uint64_t>(v))), v});
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.chance(edge_num, edge_den)) edges.push_back({u, v});
        }
    }
    return Graph(n, edges);
}

}  // namespace chromastat
