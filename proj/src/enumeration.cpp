#include "cactus/enumeration.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "cactus/invariants.hpp"

namespace cactus {

namespace {

using CellKey = std::pair<int, int>;
using CellStore = std::map<CellKey, std::vector<Graph>>;

void insert_unique(std::map<CanonicalForm, Graph>& dedup, Graph g) {
    CanonicalForm form = canonical_form(g);
    dedup.emplace(std::move(form), std::move(g));
}

Graph with_pendant(const Graph& g, Vertex at) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count() + 1);
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
    edges.emplace_back(at, g.vertex_count());
    return Graph::from_edge_list(g.vertex_count() + 1, edges);
}

Graph with_cycle(const Graph& g, Vertex at, int len) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count() + len);
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
    int base = g.vertex_count();
    int prev = at;
    for (int k = 0; k < len - 1; ++k) {
        edges.emplace_back(prev, base + k);
        prev = base + k;
    }
    edges.emplace_back(prev, at);
    return Graph::from_edge_list(base + len - 1, edges);
}

// Every cactus with at least two blocks has a terminal block whose removal
// leaves a smaller cactus, so attaching one terminal block everywhere on
// every smaller cell reaches the whole class.
const std::vector<Graph>& cell_graphs(CellStore& store, int n, int t) {
    CellKey key{n, t};
    auto hit = store.find(key);
    if (hit != store.end()) return hit->second;

    std::map<CanonicalForm, Graph> dedup;
    if (n == 1 && t == 0) {
        insert_unique(dedup, Graph::from_edge_list(1, {}));
    } else {
        if (n >= 2 && n - 1 >= 2 * t + 1) {
            for (const Graph& g : cell_graphs(store, n - 1, t))
                for (Vertex v = 0; v < g.vertex_count(); ++v)
                    insert_unique(dedup, with_pendant(g, v));
        }
        if (t >= 1) {
            for (int len = 3; len <= n; ++len) {
                int prev_n = n - len + 1;
                if (prev_n < 1 || prev_n < 2 * (t - 1) + 1) continue;
                for (const Graph& g : cell_graphs(store, prev_n, t - 1))
                    for (Vertex v = 0; v < g.vertex_count(); ++v)
                        insert_unique(dedup, with_cycle(g, v, len));
            }
        }
    }
    std::vector<Graph> graphs;
    graphs.reserve(dedup.size());
    for (auto& [form, g] : dedup) graphs.push_back(std::move(g));
    return store.emplace(key, std::move(graphs)).first->second;
}

} // namespace

EnumerationCell enumerate_cacti(CactusClassParams params, int max_n) {
    if (params.n > max_n)
        throw TooLarge("enumeration capped at n = " + std::to_string(max_n));
    CellStore store;
    EnumerationCell cell{params, cell_graphs(store, params.n, params.t)};
    return cell;
}

EnumerationCell filter_oracle(CactusClassParams params) {
    if (params.n > kFilterOracleCap)
        throw TooLarge("filter oracle capped at n = " + std::to_string(kFilterOracleCap));
    int n = params.n;
    int want_edges = params.edge_count();
    int slots = n * (n - 1) / 2;

    std::vector<std::pair<int, int>> all_pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all_pairs.emplace_back(i, j);

    std::map<CanonicalForm, Graph> dedup;
    for (uint32_t mask = 0; mask < (1u << slots); ++mask) {
        if (__builtin_popcount(mask) != want_edges) continue;

        // Cheap connectivity probe on the bitmask before building anything.
        uint32_t adj[7] = {};
        for (int b = 0; b < slots; ++b) {
            if (mask & (1u << b)) {
                adj[all_pairs[b].first] |= 1u << all_pairs[b].second;
                adj[all_pairs[b].second] |= 1u << all_pairs[b].first;
            }
        }
        uint32_t reach = 1;
        for (;;) {
            uint32_t next = reach;
            for (int v = 0; v < n; ++v)
                if (reach & (1u << v)) next |= adj[v];
            if (next == reach) break;
            reach = next;
        }
        if (reach != (1u << n) - 1) continue;

        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < slots; ++b)
            if (mask & (1u << b)) edges.push_back(all_pairs[b]);
        Graph g = Graph::from_edge_list(n, edges);
        try {
            if (cactus_cycle_count(g) != params.t) continue;
        } catch (const NotCactus&) {
            continue;
        }
        dedup.emplace(canonical_form(g), std::move(g));
    }

    EnumerationCell cell{params, {}};
    cell.graphs.reserve(dedup.size());
    for (auto& [form, g] : dedup) cell.graphs.push_back(std::move(g));
    return cell;
}

ExtremalScan extremal_scan(const EnumerationCell& cell) {
    ExtremalScan scan;
    bool first = true;
    for (const Graph& g : cell.graphs) {
        int64_t we = edge_wiener(g);
        if (first || we < scan.min_value) {
            scan.min_value = we;
            scan.min_graphs.clear();
        }
        if (we == scan.min_value) scan.min_graphs.push_back(g);
        if (first || we > scan.max_value) {
            scan.max_value = we;
            scan.max_graphs.clear();
        }
        if (we == scan.max_value) scan.max_graphs.push_back(g);
        first = false;
    }
    return scan;
}

} // namespace cactus
