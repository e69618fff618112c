#ifndef CACTUS_RANDOM_HPP
#define CACTUS_RANDOM_HPP

#include <cstdint>

#include "cactus/graph.hpp"

namespace cactus {

// Self-contained generator so seeded runs are byte-identical across
// standard libraries and platforms.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, bound); modulo bias is irrelevant here.
    int below(int bound) { return static_cast<int>(next() % static_cast<uint64_t>(bound)); }

    int in_range(int lo, int hi) { return lo + below(hi - lo + 1); }
};

// Random labeled tree on n vertices (each vertex hangs off an earlier one).
Graph random_tree(SplitMix64& rng, int n);

// Random connected cactus on n vertices, grown block by block.
Graph random_cactus(SplitMix64& rng, int n);

// Random connected graph: a tree plus up to extra_edges additional edges.
Graph random_connected_graph(SplitMix64& rng, int n, int extra_edges);

} // namespace cactus

#endif // CACTUS_RANDOM_HPP
