#include "cactus/random.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace cactus {

Graph random_tree(SplitMix64& rng, int n) {
    if (n < 1) throw InvalidParams("random tree needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rng.below(v), v);
    return Graph::from_edge_list(n, edges);
}

Graph random_cactus(SplitMix64& rng, int n) {
    if (n < 1) throw InvalidParams("random cactus needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    int built = 1;
    while (built < n) {
        int remaining = n - built;
        int attach = rng.below(built);
        bool add_cycle = remaining >= 2 && rng.below(2) == 0;
        if (add_cycle) {
            int len = 3 + rng.below(std::min(remaining - 1, 2)); // cycle length 3 or 4
            int prev = attach;
            for (int k = 0; k < len - 1; ++k) {
                edges.emplace_back(prev, built);
                prev = built;
                ++built;
            }
            edges.emplace_back(prev, attach);
        } else {
            edges.emplace_back(attach, built);
            ++built;
        }
    }
    return Graph::from_edge_list(n, edges);
}

Graph random_connected_graph(SplitMix64& rng, int n, int extra_edges) {
    if (n < 1) throw InvalidParams("random graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rng.below(v), v);
    std::vector<std::vector<char>> have(n, std::vector<char>(n, 0));
    for (auto& [u, v] : edges) have[u][v] = have[v][u] = 1;
    for (int k = 0; k < extra_edges; ++k) {
        int u = rng.below(n);
        int v = rng.below(n);
        if (u == v || have[u][v]) continue;
        have[u][v] = have[v][u] = 1;
        edges.emplace_back(u, v);
    }
    return Graph::from_edge_list(n, edges);
}

} // namespace cactus
