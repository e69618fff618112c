#include "cactus/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace cactus {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0) throw InvalidVertex("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.edges_.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        if (a == b) throw InvalidEdge("loop edge " + std::to_string(a) + "-" + std::to_string(b));
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw InvalidVertex("edge endpoint out of range: " + std::to_string(a) + "-" +
                                std::to_string(b));
        g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end())
        throw DuplicateEdge("duplicate edge " + std::to_string(dup->u) + "-" +
                            std::to_string(dup->v));
    g.adj_.assign(n, {});
    for (const Edge& e : g.edges_) {
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(Vertex u, Vertex v) const {
    if (!has_edge(u, v)) return -1;
    Edge e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return static_cast<int>(it - edges_.begin());
}

std::vector<uint16_t> bfs_distances(const Graph& g, Vertex source) {
    const uint16_t unreached = std::numeric_limits<uint16_t>::max();
    std::vector<uint16_t> dist(g.vertex_count(), unreached);
    dist[source] = 0;
    std::queue<Vertex> q;
    q.push(source);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == unreached) {
                dist[w] = static_cast<uint16_t>(dist[u] + 1);
                q.push(w);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(),
                        [](uint16_t d) { return d == std::numeric_limits<uint16_t>::max(); });
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    int n = g.vertex_count();
    std::vector<uint16_t> dist;
    dist.reserve(static_cast<size_t>(n) * n);
    for (Vertex s = 0; s < n; ++s) {
        auto row = bfs_distances(g, s);
        for (uint16_t d : row) {
            if (d == std::numeric_limits<uint16_t>::max())
                throw Disconnected("graph is disconnected");
            dist.push_back(d);
        }
    }
    return DistanceMatrix(n, std::move(dist));
}

namespace {

// Iterative lowpoint DFS with an edge stack, rooted at vertex 0.
struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low, parent_edge;
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> blocks;
    std::vector<char> is_cut;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph),
          disc(graph.vertex_count(), -1),
          low(graph.vertex_count(), -1),
          parent_edge(graph.vertex_count(), -1),
          is_cut(graph.vertex_count(), 0) {}

    void pop_block(int until_edge) {
        std::vector<int> block;
        while (true) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == until_edge) break;
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }

    void run_from(Vertex root) {
        struct Frame {
            Vertex v;
            size_t next;
        };
        std::vector<Frame> stack;
        disc[root] = low[root] = timer++;
        stack.push_back({root, 0});
        int root_children = 0;
        while (!stack.empty()) {
            Vertex v = stack.back().v;
            const auto& nb = g.neighbors(v);
            if (stack.back().next < nb.size()) {
                Vertex w = nb[stack.back().next++];
                int ei = g.edge_index(v, w);
                if (disc[w] == -1) {
                    if (v == root) ++root_children;
                    parent_edge[w] = ei;
                    edge_stack.push_back(ei);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, 0});
                } else if (ei != parent_edge[v] && disc[w] < disc[v]) {
                    edge_stack.push_back(ei);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    Vertex p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) {
                        pop_block(parent_edge[v]);
                        if (p != root) is_cut[p] = 1;
                    }
                }
            }
        }
        if (root_children > 1) is_cut[root] = 1;
    }
};

std::vector<Vertex> block_vertices(const Graph& g, const std::vector<int>& block) {
    std::vector<Vertex> verts;
    verts.reserve(block.size() * 2);
    for (int ei : block) {
        verts.push_back(g.edge(ei).u);
        verts.push_back(g.edge(ei).v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

} // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    if (!is_connected(g)) throw Disconnected("graph is disconnected");
    BlockFinder finder(g);
    if (g.vertex_count() > 0) finder.run_from(0);
    std::sort(finder.blocks.begin(), finder.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    BlockDecomposition out;
    out.blocks = std::move(finder.blocks);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (finder.is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

int cactus_cycle_count(const Graph& g) {
    auto decomp = block_decomposition(g);
    int cycles = 0;
    for (const auto& block : decomp.blocks) {
        if (block.size() == 1) continue;
        // A 2-connected block is a chordless cycle exactly when it has as
        // many vertices as edges.
        auto verts = block_vertices(g, block);
        if (verts.size() != block.size() || block.size() < 3)
            throw NotCactus("block is neither an edge nor a chordless cycle");
        ++cycles;
    }
    return cycles;
}

bool is_chain_cactus(const Graph& g) {
    cactus_cycle_count(g); // validates cactusness
    auto decomp = block_decomposition(g);
    std::vector<char> cut(g.vertex_count(), 0);
    for (Vertex v : decomp.cut_vertices) cut[v] = 1;
    std::vector<int> blocks_at(g.vertex_count(), 0);
    for (const auto& block : decomp.blocks) {
        int cuts_here = 0;
        for (Vertex v : block_vertices(g, block)) {
            if (cut[v]) {
                ++cuts_here;
                ++blocks_at[v];
            }
        }
        if (cuts_here > 2) return false;
    }
    for (Vertex v : decomp.cut_vertices)
        if (blocks_at[v] != 2) return false;
    return true;
}

std::vector<std::vector<Vertex>> internal_paths(const Graph& g) {
    std::vector<std::vector<Vertex>> paths;
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        if (g.degree(start) <= 2) continue;
        for (Vertex first : g.neighbors(start)) {
            std::vector<Vertex> walk{start, first};
            Vertex prev = start;
            Vertex cur = first;
            bool closed = false;
            while (g.degree(cur) == 2) {
                Vertex next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1]
                                                          : g.neighbors(cur)[0];
                if (next == start) {
                    closed = true; // walked around a cycle back to the start
                    break;
                }
                walk.push_back(next);
                prev = cur;
                cur = next;
            }
            if (closed || g.degree(cur) <= 2) continue;
            // Each path is discovered from both ends; keep one orientation.
            std::vector<Vertex> reversed(walk.rbegin(), walk.rend());
            if (walk <= reversed) paths.push_back(std::move(walk));
        }
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

} // namespace cactus
