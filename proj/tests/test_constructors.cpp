#include "doctest.h"

#include "cactus/canonical.hpp"
#include "cactus/constructors.hpp"
#include "cactus/invariants.hpp"

#include "oracle.hpp"

using namespace cactus;

TEST_CASE("basic families") {
    CHECK(path(2).edge_count() == 1);
    CHECK(cycle(3).edge_count() == 3);
    CHECK(star(4).degree(0) == 3);
    CHECK_THROWS_AS(path(0), InvalidParams);
    CHECK_THROWS_AS(cycle(2), InvalidParams);
    CHECK_THROWS_AS(star(0), InvalidParams);
}

TEST_CASE("cactus class params enforce n >= 2t + 1") {
    CHECK_NOTHROW(CactusClassParams(5, 2));
    CHECK_THROWS_AS(CactusClassParams(4, 2), InvalidParams);
    CHECK_THROWS_AS(CactusClassParams(3, -1), InvalidParams);
    CHECK(CactusClassParams(7, 3).edge_count() == 9);
}

TEST_CASE("bundle shapes") {
    CHECK(canonical_form(bundle(CactusClassParams(3, 1))) == canonical_form(cycle(3)));
    CHECK(canonical_form(bundle(CactusClassParams(5, 0))) == canonical_form(star(5)));
    CHECK(edge_wiener(bundle(CactusClassParams(5, 1))) == 12);
    Graph b = bundle(CactusClassParams(9, 3));
    CHECK(b.edge_count() == 9 + 3 - 1);
    CHECK(cactus_cycle_count(b) == 3);
}

TEST_CASE("triangle chains") {
    CHECK(canonical_form(triangle_chain(1)) == canonical_form(cycle(3)));
    Graph tc2 = triangle_chain(2);
    CHECK(tc2.vertex_count() == 5);
    CHECK(cactus_cycle_count(tc2) == 2);
    CHECK(canonical_form(tc2) == canonical_form(bundle(CactusClassParams(5, 2))));
    CHECK(triangle_chain(0).vertex_count() == 1);
    CHECK(triangle_chain(0).edge_count() == 0);
    CHECK_THROWS_AS(triangle_chain(-1), InvalidParams);
}

TEST_CASE("saw graphs") {
    CHECK(canonical_form(saw(0, 0, 7)) == canonical_form(path(7)));
    CHECK(edge_wiener(saw(0, 1, 4)) == 7);
    CHECK(edge_wiener(saw(1, 1, 6)) == 38);
    CHECK_THROWS_AS(saw(2, 0, 4), InvalidParams);

    for (auto [i, j, n] : {std::tuple{1, 2, 9}, {0, 2, 7}, {2, 2, 10}, {1, 3, 11}})
        CHECK(canonical_form(saw(i, j, n)) == canonical_form(saw(j, i, n)));

    for (auto [i, j, n] : {std::tuple{1, 0, 5}, {1, 1, 7}, {2, 1, 8}, {1, 2, 7}}) {
        Graph g = saw(i, j, n);
        CHECK(g.vertex_count() == n);
        CHECK(g.edge_count() == n - 1 + i + j);
        CHECK(cactus_cycle_count(g) == i + j);
        CHECK(is_chain_cactus(g));
    }
}

TEST_CASE("bundles with three or more blocks at the hub are not chains") {
    CHECK_FALSE(is_chain_cactus(bundle(CactusClassParams(6, 2)))); // two triangles + pendant
    CHECK_FALSE(is_chain_cactus(bundle(CactusClassParams(7, 3))));
    // Two blocks only: the 5-vertex two-triangle bundle is a chain.
    CHECK(is_chain_cactus(bundle(CactusClassParams(5, 2))));
}

TEST_CASE("clipped cycles") {
    Graph d4 = clipped_cycle(4);
    CHECK(canonical_form(d4) == canonical_form(saw(0, 1, 4)));
    CHECK(edge_wiener(clipped_cycle(5)) == 15);
    CHECK(edge_wiener(clipped_cycle(5)) == edge_wiener(cycle(5)));
    Graph d6 = clipped_cycle(6);
    CHECK(d6.vertex_count() == 6);
    CHECK(d6.edge_count() == 6);
    CHECK(cactus_cycle_count(d6) == 1);
    CHECK_THROWS_AS(clipped_cycle(3), InvalidParams);
}

TEST_CASE("chain cactus builder") {
    CHECK(canonical_form(chain_cactus({3, 3})) == canonical_form(triangle_chain(2)));
    CHECK(canonical_form(chain_cactus({2, 2, 2})) == canonical_form(path(4)));
    CHECK(canonical_form(chain_cactus({3, 2, 3})) == canonical_form(saw(1, 1, 6)));
    CHECK_THROWS_AS(chain_cactus({3, 1}), InvalidParams);

    Graph g = chain_cactus({4, 2, 5, 3});
    CHECK(cactus_cycle_count(g) == 3);
    CHECK(is_chain_cactus(g));
    CHECK(g.edge_count() == g.vertex_count() - 1 + 3);
}

TEST_CASE("coalescence keeps counts and returns the joint") {
    auto tri_pendant = coalesce(cycle(3), 0, path(2), 0);
    CHECK(tri_pendant.graph.vertex_count() == 4);
    CHECK(tri_pendant.graph.edge_count() == 4);
    CHECK(tri_pendant.joint == 0);
    CHECK(canonical_form(tri_pendant.graph) == canonical_form(saw(0, 1, 4)));

    auto two_tri = coalesce(cycle(3), 1, cycle(3), 2);
    CHECK(canonical_form(two_tri.graph) == canonical_form(bundle(CactusClassParams(5, 2))));

    auto s4 = coalesce(path(3), 1, path(2), 0);
    CHECK(canonical_form(s4.graph) == canonical_form(star(4)));

    CHECK_THROWS_AS(coalesce(cycle(3), 5, path(2), 0), InvalidVertex);
}
