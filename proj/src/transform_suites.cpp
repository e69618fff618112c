#include <algorithm>
#include <sstream>

#include "cactus/constructors.hpp"
#include "cactus/invariants.hpp"
#include "cactus/io.hpp"
#include "cactus/random.hpp"
#include "cactus/transforms.hpp"

namespace cactus {

namespace {

bool is_path_shape(const Graph& g) {
    if (g.edge_count() != g.vertex_count() - 1) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

// Cycle of length `len` with the given attachments coalesced onto its
// vertices; attachment k != nullptr hangs at cycle vertex k via its own
// vertex 0. Cycle ids stay 0..len-1.
Graph cycle_with_attachments(int len, const std::vector<const Graph*>& attachments) {
    Graph host = cycle(len);
    for (int k = 0; k < len; ++k) {
        if (attachments[k] && attachments[k]->vertex_count() > 1)
            host = coalesce(host, k, *attachments[k], 0).graph;
    }
    return host;
}

struct InstanceCheck {
    bool valid = false;       // instance satisfies the lemma's hypotheses
    bool holds = false;       // claimed relation + equality characterization
    bool equality = false;    // W_e unchanged
    bool delta_checked = false;
    bool delta_ok = true;
    int cycle_len = 0;
    Graph before;
    Graph after;
};

InstanceCheck run_one(LemmaId id, int ordinal, SplitMix64& rng) {
    InstanceCheck res;
    switch (id) {
        case LemmaId::L3: {
            Graph g1 = random_cactus(rng, rng.in_range(2, 4));
            Graph g2 = random_cactus(rng, rng.in_range(2, 4));
            Vertex a = rng.below(g1.vertex_count());
            Vertex b = rng.below(g2.vertex_count());
            std::vector<std::pair<int, int>> edges;
            for (const Edge& e : g1.edges()) edges.emplace_back(e.u, e.v);
            int shift = g1.vertex_count();
            for (const Edge& e : g2.edges()) edges.emplace_back(e.u + shift, e.v + shift);
            edges.emplace_back(a, b + shift);
            Graph host = Graph::from_edge_list(shift + g2.vertex_count(), edges);
            auto out = contract_cut_edge(host, host.edge_index(a, b + shift));
            res.valid = true;
            res.holds = out.holds;
            res.equality = out.we_after == out.we_before;
            res.before = std::move(out.before);
            res.after = std::move(out.after);
            break;
        }
        case LemmaId::L4_5: {
            int len = 3 + ordinal % 4; // cycles through 3,4,5,6: both parities covered
            res.cycle_len = len;
            std::vector<Graph> owned(len);
            std::vector<const Graph*> att(len, nullptr);
            bool few = rng.below(4) == 0; // sometimes build end-block instances
            for (int k = 0; k < len; ++k) {
                int nk = few && k > 0 ? 1 : rng.in_range(1, 4);
                if (nk > 1) {
                    owned[k] = random_cactus(rng, nk);
                    att[k] = &owned[k];
                }
            }
            Graph host = cycle_with_attachments(len, att);
            std::vector<Vertex> cyc(len);
            for (int k = 0; k < len; ++k) cyc[k] = k;
            bool was_end_block = cycle_is_end_block(host, cyc);
            auto out = consolidate_cycle_attachments(host, cyc);
            res.valid = true;
            res.equality = out.we_after == out.we_before;
            res.holds = out.holds && (res.equality == was_end_block);
            res.before = std::move(out.before);
            res.after = std::move(out.after);
            break;
        }
        case LemmaId::L6:
        case LemmaId::L7: {
            int r = id == LemmaId::L7 ? 4 : 5 + ordinal % 3;
            res.cycle_len = r;
            Graph g0 = random_cactus(rng, rng.in_range(2, 5));
            std::vector<Graph> owned{g0};
            std::vector<const Graph*> att(r, nullptr);
            att[0] = &owned[0];
            Graph host = cycle_with_attachments(r, att);
            std::vector<Vertex> cyc(r);
            for (int k = 0; k < r; ++k) cyc[k] = k;
            auto out = shrink_end_cycle(host, cyc);
            res.valid = true;
            res.holds = out.holds;
            res.equality = out.we_after == out.we_before;
            if (id == LemmaId::L7) {
                int64_t m = host.edge_count() - r;
                res.delta_checked = true;
                res.delta_ok = (out.we_before - out.we_after) == 1 + m;
                res.holds = res.holds && res.delta_ok;
            }
            res.before = std::move(out.before);
            res.after = std::move(out.after);
            break;
        }
        case LemmaId::L8: {
            int l = 4 + ordinal % 4; // l = 4 exercises the exact-delta case
            res.cycle_len = l;
            // Trees keep the edge and vertex maxima on the same component.
            std::vector<Graph> owned;
            owned.reserve(l);
            std::vector<int> m(l);
            for (int k = 0; k < l; ++k) {
                m[k] = rng.in_range(1, 3);
                owned.push_back(random_tree(rng, m[k] + 1));
            }
            int max_at = static_cast<int>(std::max_element(m.begin(), m.end()) - m.begin());
            std::vector<const Graph*> att(l);
            for (int k = 0; k < l; ++k) att[k] = &owned[(max_at + k) % l];
            Graph host = cycle_with_attachments(l, att);
            std::vector<Vertex> cyc(l);
            for (int k = 0; k < l; ++k) cyc[k] = k;
            auto out = clip_cycle(host, cyc);
            res.valid = true;
            res.holds = out.holds;
            res.equality = out.we_after == out.we_before;
            if (l == 4) {
                auto mm = cycle_component_edge_counts(host, cyc);
                int64_t formula = static_cast<int64_t>(mm[0] - mm[1]) * mm[3] + 2 * mm[0] -
                                  mm[1] - 1;
                bool all_one = std::all_of(mm.begin(), mm.end(), [](int x) { return x == 1; });
                res.delta_checked = true;
                res.delta_ok = (out.we_after - out.we_before) == formula;
                res.holds = res.holds && res.delta_ok && (res.equality == all_one);
            }
            res.before = std::move(out.before);
            res.after = std::move(out.after);
            break;
        }
        case LemmaId::L9: {
            Graph g1 = random_cactus(rng, rng.in_range(2, 5));
            Graph g2 = random_cactus(rng, rng.in_range(2, 5));
            if (g2.edge_count() < g1.edge_count()) std::swap(g1, g2);
            Graph g3 = random_cactus(rng, rng.in_range(2, 4));
            auto out = relocate_branch_to_farthest(g1, rng.below(g1.vertex_count()), g2,
                                                   rng.below(g2.vertex_count()), g3,
                                                   rng.below(g3.vertex_count()));
            res.valid = out.claimed.has_value();
            res.holds = out.holds;
            res.equality = out.we_after == out.we_before;
            res.before = std::move(out.before);
            res.after = std::move(out.after);
            break;
        }
        case LemmaId::L10: {
            Graph g1 = random_cactus(rng, rng.in_range(2, 4));
            Graph g2 = random_cactus(rng, rng.in_range(2, 4));
            Graph g3 = random_cactus(rng, rng.in_range(2, 4));
            if (g3.edge_count() < g2.edge_count()) std::swap(g2, g3);
            auto out = detach_from_triangle(g1, rng.below(g1.vertex_count()), g2,
                                            rng.below(g2.vertex_count()), g3,
                                            rng.below(g3.vertex_count()));
            res.valid = out.claimed.has_value();
            res.holds = out.holds;
            res.equality = out.we_after == out.we_before;
            res.before = std::move(out.before);
            res.after = std::move(out.after);
            break;
        }
        case LemmaId::L11: {
            Graph g2 = random_cactus(rng, rng.in_range(3, 6));
            if (is_path_shape(g2)) return res; // regenerate
            Graph g1 = random_cactus(rng, rng.in_range(2, 4));
            auto out = relocate_pendant_path(g1, rng.below(g1.vertex_count()), g2,
                                             rng.in_range(2, 5));
            res.valid = true;
            res.holds = out.holds;
            res.equality = out.we_after == out.we_before;
            res.before = std::move(out.before);
            res.after = std::move(out.after);
            break;
        }
        case LemmaId::L12: {
            Graph g1 = random_cactus(rng, rng.in_range(2, 5));
            Graph g2 = random_cactus(rng, rng.in_range(2, 5));
            if (g2.edge_count() < g1.edge_count()) std::swap(g1, g2);
            int s = rng.in_range(4, 7);
            auto out = slide_saw_tail(g1, rng.below(g1.vertex_count()), g2,
                                      rng.below(g2.vertex_count()), s);
            int64_t m1 = g1.edge_count();
            int64_t m2 = g2.edge_count();
            res.valid = true;
            res.equality = out.we_after == out.we_before;
            res.delta_checked = true;
            res.delta_ok = (out.we_after - out.we_before) == (m2 - m1) * (2 * s - 6);
            res.holds = out.holds && res.delta_ok && (res.equality == (m1 == m2));
            res.before = std::move(out.before);
            res.after = std::move(out.after);
            break;
        }
    }
    return res;
}

} // namespace

LemmaSuiteRow run_lemma_suite(LemmaId id, uint64_t seed, int count) {
    // Per-lemma seed offset so suites stay stable if one of them changes.
    SplitMix64 rng(seed * 1000003ULL + static_cast<uint64_t>(id));
    LemmaSuiteRow row;
    row.lemma = id;
    int guard = 0;
    while (row.instances < count && guard < count * 50) {
        ++guard;
        InstanceCheck res = run_one(id, row.instances, rng);
        if (!res.valid) continue;
        // Every rewrite must keep vertex count, edge count, connectivity
        // and the cycle count intact.
        bool preserved = res.after.vertex_count() == res.before.vertex_count() &&
                         res.after.edge_count() == res.before.edge_count() &&
                         is_connected(res.after) &&
                         cactus_cycle_count(res.after) == cactus_cycle_count(res.before);
        res.holds = res.holds && preserved;
        ++row.instances;
        if (res.holds) ++row.holds;
        if (res.equality) ++row.equalities;
        if (res.delta_checked) {
            ++row.delta_checked;
            if (!res.delta_ok) ++row.delta_mismatches;
        }
        if (res.cycle_len > 0) {
            if (res.cycle_len % 2 == 0)
                ++row.even_cycle_cases;
            else
                ++row.odd_cycle_cases;
        }
        if (!res.holds && row.failure_witnesses.size() < 16)
            row.failure_witnesses.push_back(emit_graph6(res.before));
    }
    return row;
}

std::vector<LemmaSuiteRow> run_all_lemma_suites(uint64_t seed, int count) {
    std::vector<LemmaSuiteRow> rows;
    for (LemmaId id : {LemmaId::L3, LemmaId::L4_5, LemmaId::L6, LemmaId::L7, LemmaId::L8,
                       LemmaId::L9, LemmaId::L10, LemmaId::L11, LemmaId::L12})
        rows.push_back(run_lemma_suite(id, seed, count));
    return rows;
}

std::string lemma_suite_csv(const std::vector<LemmaSuiteRow>& rows) {
    std::ostringstream out;
    out << "lemma,instances,holds,equalities,delta_checked,delta_mismatches,failures\n";
    for (const auto& row : rows) {
        out << lemma_name(row.lemma) << ',' << row.instances << ',' << row.holds << ','
            << row.equalities << ',' << row.delta_checked << ',' << row.delta_mismatches << ','
            << row.failure_witnesses.size() << '\n';
    }
    return out.str();
}

} // namespace cactus
