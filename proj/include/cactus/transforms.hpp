#ifndef CACTUS_TRANSFORMS_HPP
#define CACTUS_TRANSFORMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cactus/graph.hpp"

namespace cactus {

enum class LemmaId { L3, L4_5, L6, L7, L8, L9, L10, L11, L12 };

const char* lemma_name(LemmaId id);

enum class Relation { Less, LessEq, Greater, GreaterEq };

bool relation_satisfied(Relation rel, int64_t we_before, int64_t we_after);

// One applied rewrite. we_before/we_after are always recomputed from the
// graphs, never taken from a lemma's closed-form delta. claimed is empty
// when the instance sits outside the lemma's hypotheses (recorded, not
// asserted); holds is true when there is no claim or the claim is met.
struct TransformOutcome {
    LemmaId lemma;
    Graph before;
    Graph after;
    int64_t we_before = 0;
    int64_t we_after = 0;
    std::optional<Relation> claimed;
    bool holds = true;
};

// Contract a cut edge whose endpoints both have degree >= 2 and hang a
// pendant edge at the merged vertex. Vertex and edge counts, and the cycle
// count, are preserved; W_e strictly decreases.
TransformOutcome contract_cut_edge(const Graph& g, int edge_index);

// Move every attachment on a cycle block to the first vertex of the given
// cycle sequence. W_e never increases; equality exactly when the cycle was
// already an end-block.
TransformOutcome consolidate_cycle_attachments(const Graph& g,
                                               const std::vector<Vertex>& cycle_vertices);

// True when at most one vertex of the cycle carries non-cycle edges.
bool cycle_is_end_block(const Graph& g, const std::vector<Vertex>& cycle_vertices);

// Shrink an end-block cycle attached at cycle_vertices[0]: length r >= 5
// loses two vertices to pendants at the cut vertex, r = 4 loses one.
// W_e strictly decreases; for r = 4 the drop is exactly 1 + m where m is
// the number of edges outside the cycle.
TransformOutcome shrink_end_cycle(const Graph& g, const std::vector<Vertex>& cycle_vertices);

// Replace the closing edge v1-vl by the chord v_{l-2}-vl on a cycle whose
// heaviest attachment sits at v1. W_e never decreases; strictly increases
// for l >= 5 under the lemma's hypotheses.
TransformOutcome clip_cycle(const Graph& g, const std::vector<Vertex>& cycle_vertices);

// Edge counts of the components of g - E(cycle), one per cycle vertex.
std::vector<int> cycle_component_edge_counts(const Graph& g,
                                             const std::vector<Vertex>& cycle_vertices);

// Build G (g3 hung at the coalescence vertex of g1 and g2) and G' (g3 hung
// at the vertex of g1 farthest from u1). Claimed W_e(G') >= W_e(G) when
// m2 >= m1; otherwise recorded without a claim.
TransformOutcome relocate_branch_to_farthest(const Graph& g1, Vertex u1, const Graph& g2,
                                             Vertex u2, const Graph& g3, Vertex u3);

// Triangle v1v2v3 with g2 at v2 and g3 at v3; G hangs g1 at v1, G' hangs it
// at the vertex of g2 farthest from its attachment point. Claimed strict
// increase when m3 >= m2.
TransformOutcome detach_from_triangle(const Graph& g1, Vertex x1, const Graph& g2, Vertex x2,
                                      const Graph& g3, Vertex x3);

// g2 (not a path) with a pendant path on s vertices at one end of a longest
// path and g1 at the other end; G' moves g1 to the far end of the pendant
// path. The path is hung at the endpoint with the larger D_v. Claimed
// strict increase.
TransformOutcome relocate_pendant_path(const Graph& g1, Vertex u1, const Graph& g2, int s);

// Path on s >= 4 vertices with a triangle apex over its far end (g2 side);
// G' rebuilds the apex over its near end (g1 side). Claimed
// W_e(G') - W_e(G) = (m2 - m1)(2s - 6) when m2 >= m1, equality iff m1 = m2.
TransformOutcome slide_saw_tail(const Graph& g1, Vertex u, const Graph& g2, Vertex v, int s);

Vertex farthest_vertex(const Graph& g, Vertex from);

// --- seeded verification suites -----------------------------------------

struct LemmaSuiteRow {
    LemmaId lemma;
    int instances = 0;
    int holds = 0;
    int equalities = 0;
    int delta_checked = 0;
    int delta_mismatches = 0;
    int even_cycle_cases = 0; // cycle-based lemmas track their parity split
    int odd_cycle_cases = 0;
    std::vector<std::string> failure_witnesses; // graph6 of offending before-graphs
};

// Generates `count` valid random instances of the lemma (attachments are
// small random trees/cacti) and applies the rewrite to each. A row "holds"
// when the claimed relation, the lemma's equality characterization, and its
// exact delta (L7, L8 with l = 4, L12) all check out.
LemmaSuiteRow run_lemma_suite(LemmaId id, uint64_t seed, int count);

std::vector<LemmaSuiteRow> run_all_lemma_suites(uint64_t seed, int count);

std::string lemma_suite_csv(const std::vector<LemmaSuiteRow>& rows);

} // namespace cactus

#endif // CACTUS_TRANSFORMS_HPP
