#ifndef CACTUS_CONSTRUCTORS_HPP
#define CACTUS_CONSTRUCTORS_HPP

#include <vector>

#include "cactus/graph.hpp"

namespace cactus {

// The class G_{n,t}: all cacti with n vertices and t cycles.
// Every cycle needs at least two private vertices, hence n >= 2t + 1.
struct CactusClassParams {
    int n;
    int t;

    CactusClassParams(int n_, int t_);

    int edge_count() const { return n - 1 + t; }

    friend bool operator==(const CactusClassParams&, const CactusClassParams&) = default;
    friend auto operator<=>(const CactusClassParams&, const CactusClassParams&) = default;
};

// P_n labeled 0..n-1 in path order (n >= 1).
Graph path(int n);
// C_n labeled 0..n-1 in cycle order (n >= 3).
Graph cycle(int n);
// S_n with center 0 and leaves 1..n-1 (n >= 1).
Graph star(int n);

// C_0(n,t): one hub (vertex 0) carrying t triangles and n-2t-1 pendant
// edges. Triangle i uses vertices 2i+1, 2i+2; pendants fill the rest.
Graph bundle(CactusClassParams params);

// i triangles sharing consecutive cut vertices; 2i+1 vertices with the two
// chain ends at 0 and 2i. Triangle k covers vertices 2k-2, 2k-1, 2k.
// i = 0 yields a single vertex.
Graph triangle_chain(int i);
inline Vertex triangle_chain_end(int i) { return 2 * i; }

// Sw(i, j; n-2i-2j-1): triangle chains of lengths i and j whose designated
// ends are the endpoints of a joining path on n-2i-2j vertices (the path
// includes both ends, so the total vertex count is exactly n).
Graph saw(int i, int j, int n);

// D_l = C_l - v1vl + v_{l-2}vl: triangle on the last three vertices with a
// path attached; l vertices, l edges (l >= 4). Vertex k is v_{k+1}.
Graph clipped_cycle(int l);

// Chain cactus with the given block sizes (2 = edge block, >= 3 = cycle
// block); consecutive blocks share one cut vertex, and each cycle hands the
// chain over at the vertex opposite its entry point.
Graph chain_cactus(const std::vector<int>& block_sizes);

// Identification of u1 in g1 with u2 in g2. Vertices of g1 keep their ids;
// vertices of g2 other than u2 are appended in increasing id order.
struct Coalescence {
    Graph graph;
    Vertex joint;
    std::vector<Vertex> map2; // map2[w] = id of g2's vertex w in the result
};

Coalescence coalesce(const Graph& g1, Vertex u1, const Graph& g2, Vertex u2);

} // namespace cactus

#endif // CACTUS_CONSTRUCTORS_HPP
