#include "cactus/invariants.hpp"

#include <algorithm>
#include <string>

namespace cactus {

int64_t wiener(const Graph& g) {
    auto dist = all_pairs_distances(g);
    int n = g.vertex_count();
    int64_t sum = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) sum += dist(u, v);
    return sum;
}

namespace {

int edge_pair_distance(const Graph& g, const DistanceMatrix& dist, int f, int h) {
    if (f == h) return 0;
    const Edge& a = g.edge(f);
    const Edge& b = g.edge(h);
    int d = std::min(std::min(dist(a.u, b.u), dist(a.u, b.v)),
                     std::min(dist(a.v, b.u), dist(a.v, b.v)));
    return d + 1;
}

} // namespace

int edge_distance(const Graph& g, const DistanceMatrix& dist, int f, int h) {
    if (f < 0 || h < 0 || f >= g.edge_count() || h >= g.edge_count())
        throw InvalidParams("edge index out of range");
    return edge_pair_distance(g, dist, f, h);
}

int edge_distance(const Graph& g, int f, int h) {
    if (f < 0 || h < 0 || f >= g.edge_count() || h >= g.edge_count())
        throw InvalidParams("edge index out of range");
    if (f == h) return 0;
    return edge_pair_distance(g, all_pairs_distances(g), f, h);
}

int64_t edge_wiener(const Graph& g) {
    if (g.edge_count() < 2) {
        if (!is_connected(g)) throw Disconnected("graph is disconnected");
        return 0;
    }
    auto dist = all_pairs_distances(g);
    int m = g.edge_count();
    int64_t sum = 0;
    for (int f = 0; f < m; ++f)
        for (int h = f + 1; h < m; ++h) sum += edge_pair_distance(g, dist, f, h);
    return sum;
}

int64_t vertex_edge_sum(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.vertex_count()) throw InvalidVertex("vertex out of range");
    auto dist = bfs_distances(g, v);
    int64_t sum = 0;
    for (const Edge& e : g.edges()) {
        uint16_t du = dist[e.u];
        uint16_t dv = dist[e.v];
        if (du == UINT16_MAX || dv == UINT16_MAX) throw Disconnected("graph is disconnected");
        sum += std::min(du, dv);
    }
    return sum;
}

int64_t coalescence_edge_wiener(const Graph& g1, Vertex u1, const Graph& g2, Vertex u2) {
    if (g1.edge_count() == 0 || g2.edge_count() == 0)
        throw DegenerateOperand("coalescence operands need at least one edge");
    int64_t m1 = g1.edge_count();
    int64_t m2 = g2.edge_count();
    return edge_wiener(g1) + edge_wiener(g2) + m1 * vertex_edge_sum(g2, u2) +
           m2 * vertex_edge_sum(g1, u1) + m1 * m2;
}

EdgeDistanceTable::EdgeDistanceTable(const Graph& g) {
    if (g.edge_count() > 4096)
        throw TooLarge("edge-distance table limited to 4096 edges");
    m_ = g.edge_count();
    auto dist = all_pairs_distances(g);
    dist_.assign(static_cast<size_t>(m_) * m_, 0);
    for (int f = 0; f < m_; ++f)
        for (int h = f + 1; h < m_; ++h) {
            auto d = static_cast<uint16_t>(edge_pair_distance(g, dist, f, h));
            dist_[static_cast<size_t>(f) * m_ + h] = d;
            dist_[static_cast<size_t>(h) * m_ + f] = d;
        }
}

} // namespace cactus
