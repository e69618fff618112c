#include "cactus/transforms.hpp"

#include <algorithm>
#include <limits>

#include "cactus/constructors.hpp"
#include "cactus/invariants.hpp"

namespace cactus {

const char* lemma_name(LemmaId id) {
    switch (id) {
        case LemmaId::L3: return "L3";
        case LemmaId::L4_5: return "L4_5";
        case LemmaId::L6: return "L6";
        case LemmaId::L7: return "L7";
        case LemmaId::L8: return "L8";
        case LemmaId::L9: return "L9";
        case LemmaId::L10: return "L10";
        case LemmaId::L11: return "L11";
        case LemmaId::L12: return "L12";
    }
    return "?";
}

bool relation_satisfied(Relation rel, int64_t we_before, int64_t we_after) {
    switch (rel) {
        case Relation::Less: return we_after < we_before;
        case Relation::LessEq: return we_after <= we_before;
        case Relation::Greater: return we_after > we_before;
        case Relation::GreaterEq: return we_after >= we_before;
    }
    return false;
}

namespace {

TransformOutcome make_outcome(LemmaId lemma, Graph before, Graph after,
                              std::optional<Relation> claimed) {
    TransformOutcome out;
    out.lemma = lemma;
    out.we_before = edge_wiener(before);
    out.we_after = edge_wiener(after);
    out.before = std::move(before);
    out.after = std::move(after);
    out.claimed = claimed;
    out.holds = !claimed || relation_satisfied(*claimed, out.we_before, out.we_after);
    return out;
}

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(g.edge_count());
    for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
    return pairs;
}

// Confirms the vertex sequence traces a chordless cycle forming one block
// of g, and returns its edge indices.
std::vector<int> require_cycle_block(const Graph& g, const std::vector<Vertex>& cycle) {
    size_t r = cycle.size();
    if (r < 3) throw NotACycleBlock("cycle must have at least 3 vertices");
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> cycle_edges;
    for (size_t k = 0; k < r; ++k) {
        Vertex a = cycle[k];
        Vertex b = cycle[(k + 1) % r];
        if (a < 0 || a >= g.vertex_count() || seen[a])
            throw NotACycleBlock("cycle sequence is not a set of distinct vertices");
        seen[a] = 1;
        int ei = g.edge_index(a, b);
        if (ei < 0) throw NotACycleBlock("consecutive cycle vertices are not adjacent");
        cycle_edges.push_back(ei);
    }
    std::vector<int> sorted_edges = cycle_edges;
    std::sort(sorted_edges.begin(), sorted_edges.end());
    auto decomp = block_decomposition(g);
    if (std::find(decomp.blocks.begin(), decomp.blocks.end(), sorted_edges) ==
        decomp.blocks.end())
        throw NotACycleBlock("vertex sequence is not a cycle block of the graph");
    return cycle_edges;
}

int attachment_count(const Graph& g, const std::vector<Vertex>& cycle, Vertex v) {
    std::vector<char> in_cycle(g.vertex_count(), 0);
    for (Vertex c : cycle) in_cycle[c] = 1;
    int count = 0;
    for (Vertex w : g.neighbors(v))
        if (!in_cycle[w]) ++count;
    return count;
}

} // namespace

TransformOutcome contract_cut_edge(const Graph& g, int edge_index) {
    if (edge_index < 0 || edge_index >= g.edge_count())
        throw InvalidParams("edge index out of range");
    Edge e = g.edge(edge_index);

    // Bridge test: v must be unreachable from u without the edge.
    {
        std::vector<char> visited(g.vertex_count(), 0);
        std::vector<Vertex> stack{e.u};
        visited[e.u] = 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(x)) {
                if ((x == e.u && w == e.v) || (x == e.v && w == e.u)) continue;
                if (!visited[w]) {
                    visited[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        if (visited[e.v]) throw NotCutEdge("edge lies on a cycle");
    }
    if (g.degree(e.u) < 2 || g.degree(e.v) < 2)
        throw PendantEndpoint("both endpoints of the contracted edge need degree >= 2");

    // Merge e.v into e.u; e.v's id is reused for the fresh pendant leaf.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == edge_index) continue;
        Edge f = g.edge(i);
        int a = f.u == e.v ? e.u : f.u;
        int b = f.v == e.v ? e.u : f.v;
        edges.emplace_back(a, b);
    }
    edges.emplace_back(e.u, e.v);
    return make_outcome(LemmaId::L3, g, Graph::from_edge_list(g.vertex_count(), edges),
                        Relation::Less);
}

bool cycle_is_end_block(const Graph& g, const std::vector<Vertex>& cycle_vertices) {
    int with_attachments = 0;
    for (Vertex v : cycle_vertices)
        if (attachment_count(g, cycle_vertices, v) > 0) ++with_attachments;
    return with_attachments <= 1;
}

TransformOutcome consolidate_cycle_attachments(const Graph& g,
                                               const std::vector<Vertex>& cycle_vertices) {
    require_cycle_block(g, cycle_vertices);
    std::vector<char> move_from(g.vertex_count(), 0);
    for (size_t k = 1; k < cycle_vertices.size(); ++k) move_from[cycle_vertices[k]] = 1;
    std::vector<char> in_cycle(g.vertex_count(), 0);
    for (Vertex v : cycle_vertices) in_cycle[v] = 1;
    Vertex v1 = cycle_vertices[0];

    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) {
        int a = e.u;
        int b = e.v;
        bool cycle_edge = in_cycle[a] && in_cycle[b];
        if (!cycle_edge) {
            if (move_from[a]) a = v1;
            if (move_from[b]) b = v1;
        }
        edges.emplace_back(a, b);
    }
    return make_outcome(LemmaId::L4_5, g, Graph::from_edge_list(g.vertex_count(), edges),
                        Relation::LessEq);
}

TransformOutcome shrink_end_cycle(const Graph& g, const std::vector<Vertex>& cycle_vertices) {
    require_cycle_block(g, cycle_vertices);
    size_t r = cycle_vertices.size();
    if (r == 3) throw CycleTooSmall("end-block shrink needs cycle length >= 4");
    for (size_t k = 1; k < r; ++k)
        if (attachment_count(g, cycle_vertices, cycle_vertices[k]) > 0)
            throw NotEndBlock("cycle has attachments away from its first vertex");
    if (attachment_count(g, cycle_vertices, cycle_vertices[0]) == 0)
        throw NotEndBlock("cycle carries no attachment at its first vertex");

    auto edges = edge_pairs(g);
    auto drop = [&](Vertex a, Vertex b) {
        std::pair<int, int> key{std::min(a, b), std::max(a, b)};
        edges.erase(std::remove(edges.begin(), edges.end(), key), edges.end());
    };
    Vertex v1 = cycle_vertices[0];
    if (r == 4) {
        // C4 collapses to a triangle at v1 with the spare vertex pendant
        // at v1; the drop in W_e is exactly 1 + m.
        drop(cycle_vertices[2], cycle_vertices[3]);
        edges.emplace_back(v1, cycle_vertices[2]);
        return make_outcome(LemmaId::L7, g, Graph::from_edge_list(g.vertex_count(), edges),
                            Relation::Less);
    }
    drop(cycle_vertices[r - 2], cycle_vertices[r - 1]);
    drop(cycle_vertices[1], cycle_vertices[2]);
    edges.emplace_back(cycle_vertices[r - 2], v1);
    edges.emplace_back(cycle_vertices[2], v1);
    return make_outcome(LemmaId::L6, g, Graph::from_edge_list(g.vertex_count(), edges),
                        Relation::Less);
}

std::vector<int> cycle_component_edge_counts(const Graph& g,
                                             const std::vector<Vertex>& cycle_vertices) {
    std::vector<char> in_cycle(g.vertex_count(), 0);
    for (Vertex v : cycle_vertices) in_cycle[v] = 1;
    std::vector<int> counts;
    counts.reserve(cycle_vertices.size());
    for (Vertex root : cycle_vertices) {
        // Component of g - E(cycle) containing root.
        std::vector<char> visited(g.vertex_count(), 0);
        std::vector<Vertex> stack{root};
        visited[root] = 1;
        int m = 0;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(x)) {
                if (in_cycle[x] && in_cycle[w]) continue;
                ++m; // counted once per direction; halved below
                if (!visited[w]) {
                    visited[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        counts.push_back(m / 2);
    }
    return counts;
}

TransformOutcome clip_cycle(const Graph& g, const std::vector<Vertex>& cycle_vertices) {
    require_cycle_block(g, cycle_vertices);
    size_t l = cycle_vertices.size();
    if (l < 4) throw CycleTooSmall("clip needs cycle length >= 4");
    auto m = cycle_component_edge_counts(g, cycle_vertices);
    if (*std::max_element(m.begin(), m.end()) != m[0])
        throw MaxNotAtV1("heaviest attachment must sit at the first cycle vertex");

    auto edges = edge_pairs(g);
    Vertex v1 = cycle_vertices[0];
    Vertex vl = cycle_vertices[l - 1];
    std::pair<int, int> closing{std::min(v1, vl), std::max(v1, vl)};
    edges.erase(std::remove(edges.begin(), edges.end(), closing), edges.end());
    edges.emplace_back(cycle_vertices[l - 3], vl);
    return make_outcome(LemmaId::L8, g, Graph::from_edge_list(g.vertex_count(), edges),
                        l == 4 ? Relation::GreaterEq : Relation::Greater);
}

Vertex farthest_vertex(const Graph& g, Vertex from) {
    auto dist = bfs_distances(g, from);
    Vertex best = from;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (dist[v] == std::numeric_limits<uint16_t>::max()) continue;
        if (dist[v] > dist[best]) best = v;
    }
    return best;
}

TransformOutcome relocate_branch_to_farthest(const Graph& g1, Vertex u1, const Graph& g2,
                                             Vertex u2, const Graph& g3, Vertex u3) {
    if (g1.vertex_count() < 2 || g2.vertex_count() < 2 || g3.vertex_count() < 2)
        throw DegenerateOperand("operands need at least two vertices");
    Coalescence base = coalesce(g1, u1, g2, u2);
    Vertex v = farthest_vertex(g1, u1); // keeps its id in the coalescence
    Graph before = coalesce(base.graph, base.joint, g3, u3).graph;
    Graph after = coalesce(base.graph, v, g3, u3).graph;
    std::optional<Relation> claimed;
    if (g2.edge_count() >= g1.edge_count()) claimed = Relation::GreaterEq;
    return make_outcome(LemmaId::L9, std::move(before), std::move(after), claimed);
}

TransformOutcome detach_from_triangle(const Graph& g1, Vertex x1, const Graph& g2, Vertex x2,
                                      const Graph& g3, Vertex x3) {
    if (g1.vertex_count() < 2 || g2.vertex_count() < 2 || g3.vertex_count() < 2)
        throw DegenerateOperand("operands need at least two vertices");
    Coalescence with_g2 = coalesce(cycle(3), 1, g2, x2);
    Vertex u2 = with_g2.map2[farthest_vertex(g2, x2)];
    Coalescence base = coalesce(with_g2.graph, 2, g3, x3);
    Graph before = coalesce(base.graph, 0, g1, x1).graph;
    Graph after = coalesce(base.graph, u2, g1, x1).graph;
    std::optional<Relation> claimed;
    if (g3.edge_count() >= g2.edge_count()) claimed = Relation::Greater;
    return make_outcome(LemmaId::L10, std::move(before), std::move(after), claimed);
}

namespace {

bool is_path_graph(const Graph& g) {
    if (g.edge_count() != g.vertex_count() - 1) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 2) return false;
    return is_connected(g);
}

// Endpoints of a longest simple path, by exhaustive DFS (operands here are
// a handful of vertices). Deterministic tie-break on the endpoint pair.
std::pair<Vertex, Vertex> longest_path_endpoints(const Graph& g) {
    int n = g.vertex_count();
    int best_len = -1;
    std::pair<Vertex, Vertex> best{0, 0};
    std::vector<char> on_path(n, 0);
    for (Vertex start = 0; start < n; ++start) {
        std::vector<std::pair<Vertex, size_t>> stack{{start, 0}};
        on_path.assign(n, 0);
        on_path[start] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back().first;
            int len = static_cast<int>(stack.size()) - 1;
            if (len > best_len ||
                (len == best_len &&
                 std::minmax(start, v) < std::minmax(best.first, best.second))) {
                best_len = len;
                best = {start, v};
            }
            const auto& nb = g.neighbors(v);
            bool advanced = false;
            while (stack.back().second < nb.size()) {
                Vertex w = nb[stack.back().second++];
                if (!on_path[w]) {
                    on_path[w] = 1;
                    stack.push_back({w, 0});
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                on_path[v] = 0;
                stack.pop_back();
            }
        }
    }
    return {std::min(best.first, best.second), std::max(best.first, best.second)};
}

} // namespace

TransformOutcome relocate_pendant_path(const Graph& g1, Vertex u1, const Graph& g2, int s) {
    if (g1.vertex_count() < 2) throw DegenerateOperand("g1 needs at least two vertices");
    if (is_path_graph(g2)) throw G2IsAPath("g2 must not be a path");
    if (s < 2) throw PathTooShort("pendant path needs at least 2 vertices");

    auto [a, b] = longest_path_endpoints(g2);
    int64_t da = vertex_edge_sum(g2, a);
    int64_t db = vertex_edge_sum(g2, b);
    Vertex u = db >= da ? a : b; // g1's end
    Vertex v = db >= da ? b : a; // pendant path's end, D_v >= D_u

    Coalescence with_path = coalesce(g2, v, path(s), 0);
    Vertex far_end = with_path.map2[s - 1];
    Graph before = coalesce(with_path.graph, u, g1, u1).graph;
    Graph after = coalesce(with_path.graph, far_end, g1, u1).graph;
    return make_outcome(LemmaId::L11, std::move(before), std::move(after), Relation::Greater);
}

TransformOutcome slide_saw_tail(const Graph& g1, Vertex u, const Graph& g2, Vertex v, int s) {
    if (s < 4) throw PathTooShort("saw tail slide needs a path on s >= 4 vertices");
    if (g1.edge_count() < 1 || g2.edge_count() < 1)
        throw DegenerateOperand("operands need at least one edge");

    std::vector<std::pair<int, int>> tail_edges;
    for (int k = 0; k + 1 < s; ++k) tail_edges.emplace_back(k, k + 1);
    tail_edges.emplace_back(s - 3, s - 1); // apex triangle at the far end
    Graph tail = Graph::from_edge_list(s, tail_edges);

    std::vector<std::pair<int, int>> slid_edges;
    for (int k = 0; k + 2 < s; ++k) slid_edges.emplace_back(k, k + 1);
    slid_edges.emplace_back(0, s - 1); // apex rebuilt over the near end
    slid_edges.emplace_back(1, s - 1);
    Graph slid = Graph::from_edge_list(s, slid_edges);

    auto assemble = [&](const Graph& h) {
        return coalesce(coalesce(h, 0, g1, u).graph, s - 2, g2, v).graph;
    };
    Graph before = assemble(tail);
    Graph after = assemble(slid);
    std::optional<Relation> claimed;
    if (g2.edge_count() >= g1.edge_count()) claimed = Relation::GreaterEq;
    return make_outcome(LemmaId::L12, std::move(before), std::move(after), claimed);
}

} // namespace cactus
