#ifndef CACTUS_INVARIANTS_HPP
#define CACTUS_INVARIANTS_HPP

#include <cstdint>
#include <vector>

#include "cactus/graph.hpp"

namespace cactus {

// W(G): sum of d(u,v) over unordered vertex pairs.
int64_t wiener(const Graph& g);

// Distance between edges f and h: 0 when f == h, otherwise the minimum
// vertex distance over endpoint pairs plus one.
int edge_distance(const Graph& g, const DistanceMatrix& dist, int f, int h);
int edge_distance(const Graph& g, int f, int h);

// W_e(G): sum of edge_distance over unordered edge pairs.
int64_t edge_wiener(const Graph& g);

// D_v(G): sum over edges f of the vertex-to-edge distance, where d(v,f) is
// the minimum over f's endpoints of d(v,.). Incident edges contribute 0.
int64_t vertex_edge_sum(const Graph& g, Vertex v);

// Right-hand side of the coalescence decomposition:
//   W_e(G1) + W_e(G2) + m1*D_u2(G2) + m2*D_u1(G1) + m1*m2,
// which equals edge_wiener of the graph merged at u1 ~ u2.
int64_t coalescence_edge_wiener(const Graph& g1, Vertex u1, const Graph& g2, Vertex u2);

// Materialized m x m edge-distance table; refuses m > 4096 (larger graphs
// stream pair distances from the vertex DistanceMatrix instead).
class EdgeDistanceTable {
public:
    EdgeDistanceTable() = default;
    explicit EdgeDistanceTable(const Graph& g);

    int m() const { return m_; }
    uint16_t operator()(int f, int h) const {
        return dist_[static_cast<size_t>(f) * m_ + h];
    }

private:
    int m_ = 0;
    std::vector<uint16_t> dist_;
};

} // namespace cactus

#endif // CACTUS_INVARIANTS_HPP
