#include "doctest.h"

#include "cactus/canonical.hpp"
#include "cactus/constructors.hpp"
#include "cactus/invariants.hpp"
#include "cactus/transforms.hpp"

using namespace cactus;

namespace {

void check_preserved(const TransformOutcome& out) {
    CHECK(out.after.vertex_count() == out.before.vertex_count());
    CHECK(out.after.edge_count() == out.before.edge_count());
    CHECK(is_connected(out.after));
    CHECK(cactus_cycle_count(out.after) == cactus_cycle_count(out.before));
}

Graph cycle_with_pendants(int len, const std::vector<Vertex>& pendant_at) {
    Graph g = cycle(len);
    for (Vertex v : pendant_at) g = coalesce(g, v, path(2), 0).graph;
    return g;
}

std::vector<Vertex> iota_cycle(int len) {
    std::vector<Vertex> cyc(len);
    for (int k = 0; k < len; ++k) cyc[k] = k;
    return cyc;
}

} // namespace

TEST_CASE("cut-edge contraction drops the edge-Wiener by m1*m2") {
    Graph host = saw(1, 1, 6); // two triangles joined by a bridge
    auto out = contract_cut_edge(host, host.edge_index(2, 3));
    CHECK(out.we_before == 38);
    CHECK(out.we_after == 29);
    CHECK(out.holds);
    check_preserved(out);
    CHECK(canonical_form(out.after) == canonical_form(bundle(CactusClassParams(6, 2))));

    auto p4 = contract_cut_edge(path(4), path(4).edge_index(1, 2));
    CHECK(p4.we_before == 4);
    CHECK(p4.we_after == 3);
    CHECK(canonical_form(p4.after) == canonical_form(star(4)));

    CHECK_THROWS_AS(contract_cut_edge(path(4), 0), PendantEndpoint);
    Graph tri_pendant = saw(0, 1, 4); // triangle on 1,2,3 with pendant vertex 0
    CHECK_THROWS_AS(contract_cut_edge(tri_pendant, tri_pendant.edge_index(2, 3)), NotCutEdge);
}

TEST_CASE("consolidating cycle attachments never increases the edge-Wiener") {
    Graph spread = cycle_with_pendants(4, {0, 2});
    auto out = consolidate_cycle_attachments(spread, iota_cycle(4));
    CHECK(out.we_after < out.we_before);
    CHECK(out.holds);
    check_preserved(out);
    CHECK(canonical_form(out.after) == canonical_form(cycle_with_pendants(4, {0, 0})));

    // An end-block stays put.
    Graph endblock = cycle_with_pendants(3, {0});
    auto same = consolidate_cycle_attachments(endblock, iota_cycle(3));
    CHECK(same.we_after == same.we_before);
    CHECK(cycle_is_end_block(endblock, iota_cycle(3)));

    Graph odd = cycle_with_pendants(5, {1, 3});
    auto odd_out = consolidate_cycle_attachments(odd, iota_cycle(5));
    CHECK(odd_out.we_after < odd_out.we_before);

    CHECK_THROWS_AS(consolidate_cycle_attachments(path(4), {0, 1, 2, 3}), NotACycleBlock);
    CHECK_THROWS_AS(consolidate_cycle_attachments(spread, {0, 1, 2}), NotACycleBlock);
}

TEST_CASE("shrinking an end cycle strictly decreases, with exact drop 1+m at r=4") {
    Graph g4 = cycle_with_pendants(4, {0});
    auto out4 = shrink_end_cycle(g4, iota_cycle(4));
    CHECK(out4.we_before == 14);
    CHECK(out4.we_after == 12);
    CHECK(out4.we_before - out4.we_after == 1 + (g4.edge_count() - 4));
    check_preserved(out4);
    CHECK(canonical_form(out4.after) == canonical_form(bundle(CactusClassParams(5, 1))));

    auto out5 = shrink_end_cycle(cycle_with_pendants(5, {0}), iota_cycle(5));
    CHECK(out5.we_after < out5.we_before);
    check_preserved(out5);

    Graph g6 = coalesce(cycle(6), 0, path(3), 0).graph;
    auto out6 = shrink_end_cycle(g6, iota_cycle(6));
    CHECK(out6.we_after < out6.we_before);

    CHECK_THROWS_AS(shrink_end_cycle(cycle_with_pendants(3, {0}), iota_cycle(3)),
                    CycleTooSmall);
    CHECK_THROWS_AS(shrink_end_cycle(cycle_with_pendants(4, {1}), iota_cycle(4)), NotEndBlock);
    CHECK_THROWS_AS(shrink_end_cycle(cycle(5), iota_cycle(5)), NotEndBlock);
}

TEST_CASE("clipping a cycle never decreases under the max-at-v1 hypothesis") {
    // l = 4, all four attachments single pendant edges: exact equality.
    Graph even = cycle_with_pendants(4, {0, 1, 2, 3});
    auto out = clip_cycle(even, iota_cycle(4));
    CHECK(out.we_after == out.we_before);
    check_preserved(out);

    // l = 5, attachment only at v1: strict increase (recorded in the text).
    Graph five = cycle_with_pendants(5, {0});
    auto out5 = clip_cycle(five, iota_cycle(5));
    CHECK(out5.we_before == 24);
    CHECK(out5.we_after == 28);

    // l = 4 with m = (2,1,1,1): delta matches the closed form exactly.
    Graph heavier = coalesce(cycle_with_pendants(4, {1, 2, 3}), 0, path(3), 0).graph;
    auto mm = cycle_component_edge_counts(heavier, iota_cycle(4));
    REQUIRE(mm == std::vector<int>{2, 1, 1, 1});
    auto out_heavy = clip_cycle(heavier, iota_cycle(4));
    CHECK(out_heavy.we_after - out_heavy.we_before ==
          (mm[0] - mm[1]) * mm[3] + 2 * mm[0] - mm[1] - 1);

    Graph max_elsewhere = cycle_with_pendants(4, {1});
    CHECK_THROWS_AS(clip_cycle(max_elsewhere, iota_cycle(4)), MaxNotAtV1);
    CHECK_THROWS_AS(clip_cycle(cycle_with_pendants(3, {0}), iota_cycle(3)), CycleTooSmall);
}

TEST_CASE("relocating a branch to the farthest vertex") {
    Graph k2 = path(2);
    auto equal_masses = relocate_branch_to_farthest(k2, 0, k2, 0, k2, 0);
    REQUIRE(equal_masses.claimed.has_value());
    CHECK(equal_masses.we_after >= equal_masses.we_before);
    CHECK(equal_masses.holds);

    auto heavier_g2 = relocate_branch_to_farthest(k2, 0, path(3), 0, k2, 0);
    CHECK(heavier_g2.we_after > heavier_g2.we_before);
    CHECK(heavier_g2.holds);

    // m2 < m1 sits outside the hypothesis: recorded with no claim.
    auto outside = relocate_branch_to_farthest(path(3), 0, k2, 0, k2, 0);
    CHECK_FALSE(outside.claimed.has_value());
    CHECK(outside.holds);

    CHECK_THROWS_AS(relocate_branch_to_farthest(Graph::from_edge_list(1, {}), 0, k2, 0, k2, 0),
                    DegenerateOperand);
}

TEST_CASE("detaching a branch from a triangle strictly increases") {
    Graph k2 = path(2);
    auto all_k2 = detach_from_triangle(k2, 0, k2, 0, k2, 0);
    REQUIRE(all_k2.claimed.has_value());
    CHECK(all_k2.we_after > all_k2.we_before);
    check_preserved(all_k2);

    auto bigger_g3 = detach_from_triangle(k2, 0, k2, 0, path(3), 1);
    CHECK(bigger_g3.we_after > bigger_g3.we_before);

    auto outside = detach_from_triangle(k2, 0, path(3), 0, k2, 0);
    CHECK_FALSE(outside.claimed.has_value());
}

TEST_CASE("relocating the pendant path off a non-path graph") {
    auto from_star = relocate_pendant_path(path(2), 0, star(4), 3);
    CHECK(from_star.we_after > from_star.we_before);
    CHECK(from_star.holds);
    check_preserved(from_star);

    auto from_lollipop = relocate_pendant_path(path(2), 0, saw(0, 1, 4), 2);
    CHECK(from_lollipop.we_after > from_lollipop.we_before);

    CHECK_THROWS_AS(relocate_pendant_path(path(2), 0, path(4), 2), G2IsAPath);
    CHECK_THROWS_AS(relocate_pendant_path(path(2), 0, star(4), 1), PathTooShort);
}

TEST_CASE("sliding the saw tail gives the exact delta (m2-m1)(2s-6)") {
    Graph k2 = path(2);
    auto balanced = slide_saw_tail(k2, 0, k2, 0, 5);
    CHECK(balanced.we_after == balanced.we_before);

    auto spread = slide_saw_tail(k2, 0, path(4), 0, 5);
    CHECK(spread.we_after - spread.we_before == (3 - 1) * (2 * 5 - 6));

    auto small = slide_saw_tail(k2, 0, path(3), 0, 4);
    CHECK(small.we_after - small.we_before == (2 - 1) * (2 * 4 - 6));

    CHECK_THROWS_AS(slide_saw_tail(k2, 0, k2, 0, 3), PathTooShort);
    CHECK_THROWS_AS(slide_saw_tail(Graph::from_edge_list(1, {}), 0, k2, 0, 5),
                    DegenerateOperand);
}

TEST_CASE("seeded suites hold at unit scale") {
    for (auto& row : run_all_lemma_suites(1, 40)) {
        CHECK(row.instances == 40);
        CHECK(row.holds == row.instances);
        CHECK(row.delta_mismatches == 0);
        CHECK(row.failure_witnesses.empty());
    }
}
