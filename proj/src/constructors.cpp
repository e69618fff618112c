#include "cactus/constructors.hpp"

#include <string>

namespace cactus {

CactusClassParams::CactusClassParams(int n_, int t_) : n(n_), t(t_) {
    if (n < 1 || t < 0 || n < 2 * t + 1)
        throw InvalidParams("invalid cactus class (n=" + std::to_string(n_) +
                            ", t=" + std::to_string(t_) + "): need n >= 2t+1, t >= 0");
}

Graph path(int n) {
    if (n < 1) throw InvalidParams("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph cycle(int n) {
    if (n < 3) throw InvalidParams("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edge_list(n, edges);
}

Graph star(int n) {
    if (n < 1) throw InvalidParams("star needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::from_edge_list(n, edges);
}

Graph bundle(CactusClassParams params) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < params.t; ++i) {
        edges.emplace_back(0, 2 * i + 1);
        edges.emplace_back(0, 2 * i + 2);
        edges.emplace_back(2 * i + 1, 2 * i + 2);
    }
    for (int v = 2 * params.t + 1; v < params.n; ++v) edges.emplace_back(0, v);
    return Graph::from_edge_list(params.n, edges);
}

Graph triangle_chain(int i) {
    if (i < 0) throw InvalidParams("triangle chain length must be non-negative");
    std::vector<std::pair<int, int>> edges;
    for (int k = 1; k <= i; ++k) {
        edges.emplace_back(2 * k - 2, 2 * k - 1);
        edges.emplace_back(2 * k - 2, 2 * k);
        edges.emplace_back(2 * k - 1, 2 * k);
    }
    return Graph::from_edge_list(2 * i + 1, edges);
}

Graph saw(int i, int j, int n) {
    if (i < 0 || j < 0 || n < 2 * i + 2 * j + 1)
        throw InvalidParams("saw graph needs i, j >= 0 and n >= 2i + 2j + 1");
    // Left chain on 0..2i, joining path on 2i..2i+q-1, right chain on the
    // remaining 2j vertices with its entry at the path's far end.
    int q = n - 2 * i - 2 * j; // vertices of the joining path, ends included
    std::vector<std::pair<int, int>> edges;
    for (int k = 1; k <= i; ++k) {
        edges.emplace_back(2 * k - 2, 2 * k - 1);
        edges.emplace_back(2 * k - 2, 2 * k);
        edges.emplace_back(2 * k - 1, 2 * k);
    }
    int u = 2 * i;
    for (int k = 0; k + 1 < q; ++k) edges.emplace_back(u + k, u + k + 1);
    int v = u + q - 1;
    for (int k = 0; k < j; ++k) {
        int entry = k == 0 ? v : v + 2 * k;
        edges.emplace_back(entry, v + 2 * k + 1);
        edges.emplace_back(entry, v + 2 * k + 2);
        edges.emplace_back(v + 2 * k + 1, v + 2 * k + 2);
    }
    return Graph::from_edge_list(n, edges);
}

Graph clipped_cycle(int l) {
    if (l < 4) throw InvalidParams("clipped cycle needs l >= 4");
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k + 1 < l; ++k) edges.emplace_back(k, k + 1);
    edges.emplace_back(l - 3, l - 1);
    return Graph::from_edge_list(l, edges);
}

Graph chain_cactus(const std::vector<int>& block_sizes) {
    std::vector<std::pair<int, int>> edges;
    int next_id = 1;
    int attach = 0;
    for (int size : block_sizes) {
        if (size < 2) throw InvalidParams("chain cactus block sizes must be >= 2");
        if (size == 2) {
            edges.emplace_back(attach, next_id);
            attach = next_id;
            ++next_id;
        } else {
            int first = next_id;
            int prev = attach;
            for (int k = 0; k < size - 1; ++k) {
                edges.emplace_back(prev, next_id);
                prev = next_id;
                ++next_id;
            }
            edges.emplace_back(prev, attach);
            attach = first + size / 2 - 1; // opposite side of the cycle
        }
    }
    return Graph::from_edge_list(next_id, edges);
}

Coalescence coalesce(const Graph& g1, Vertex u1, const Graph& g2, Vertex u2) {
    if (u1 < 0 || u1 >= g1.vertex_count() || u2 < 0 || u2 >= g2.vertex_count())
        throw InvalidVertex("coalescence vertex out of range");
    int n1 = g1.vertex_count();
    std::vector<Vertex> map2(g2.vertex_count());
    int next_id = n1;
    for (Vertex w = 0; w < g2.vertex_count(); ++w) map2[w] = w == u2 ? u1 : next_id++;

    std::vector<std::pair<int, int>> edges;
    edges.reserve(g1.edge_count() + g2.edge_count());
    for (const Edge& e : g1.edges()) edges.emplace_back(e.u, e.v);
    for (const Edge& e : g2.edges()) edges.emplace_back(map2[e.u], map2[e.v]);

    Coalescence out;
    out.graph = Graph::from_edge_list(n1 + g2.vertex_count() - 1, edges);
    out.joint = u1;
    out.map2 = std::move(map2);
    return out;
}

} // namespace cactus
