#ifndef CACTUS_GRAPH_HPP
#define CACTUS_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "cactus/errors.hpp"

namespace cactus {

using Vertex = int;

// Normalized undirected edge: u < v always.
struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph with dense 0-based vertex ids.
// Immutable after construction; the edge sequence is sorted and gives the
// deterministic edge indexing used by every edge-based invariant.
class Graph {
public:
    Graph() = default;

    // Validates, normalizes and sorts. Throws InvalidEdge on loops,
    // InvalidVertex on out-of-range ids, DuplicateEdge on repeats.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[static_cast<size_t>(index)]; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    bool has_edge(Vertex u, Vertex v) const;
    // Index into edges() for uv, or -1 when uv is not an edge.
    int edge_index(Vertex u, Vertex v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

bool is_connected(const Graph& g);

// All-pairs hop counts. Entries are 16-bit; desk-scale graphs only.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<uint16_t> dist) : n_(n), dist_(std::move(dist)) {}

    int n() const { return n_; }
    uint16_t operator()(Vertex u, Vertex v) const {
        return dist_[static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(v)];
    }

private:
    int n_ = 0;
    std::vector<uint16_t> dist_;
};

// BFS from every vertex. Throws Disconnected when some pair is unreachable.
DistanceMatrix all_pairs_distances(const Graph& g);

// Single-source hop counts; unreachable vertices get UINT16_MAX.
std::vector<uint16_t> bfs_distances(const Graph& g, Vertex source);

// Biconnected components as edge-index sets. Blocks partition the edge set;
// two blocks share at most one vertex, and shared vertices are exactly the
// cut vertices. Deterministic: each block sorted, blocks ordered by their
// smallest edge index, cut vertices sorted.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;
    std::vector<Vertex> cut_vertices;
};

BlockDecomposition block_decomposition(const Graph& g);

// Number of cycle blocks when every block is an edge or a chordless cycle.
// Throws NotCactus otherwise, Disconnected for disconnected input.
int cactus_cycle_count(const Graph& g);

// True iff each block has at most two cut vertices and each cut vertex lies
// in exactly two blocks. Requires a cactus (NotCactus propagated).
bool is_chain_cactus(const Graph& g);

// Maximal paths v0..vs (s >= 1, all vertices distinct) whose endpoints have
// degree > 2 and whose interior vertices have degree exactly 2.
// Deterministic order; each path reported once, smaller endpoint first.
std::vector<std::vector<Vertex>> internal_paths(const Graph& g);

} // namespace cactus

#endif // CACTUS_GRAPH_HPP
