#ifndef CHROMASTAT_RANDOM_GRAPH_HPP
#define CHROMASTAT_RANDOM_GRAPH_HPP

#include <cstdint>
#include <random>

#include "chromastat/graph.hpp"

namespace chromastat {

// Reproducible uniform sampling. std::mt19937_64 has a fully specified
// output sequence; the std distributions do not, so sampling below a bound
// is done here with rejection and stays byte-identical across platforms.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    // True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::mt19937_64 gen_;
};

// Stable per-case seeds: splitmix64 finalizer over (seed, stream).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Connected graph on n vertices: a random-attachment spanning tree, then
// every remaining pair independently with probability edge_num/edge_den.
Graph random_connected_graph(int n, std::uint64_t seed, std::uint64_t edge_num = 2,
                             std::uint64_t edge_den = 5);

}  // namespace chromastat

#endif
