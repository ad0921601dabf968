#include <doctest.h>

#include <stdexcept>

#include "aniso/lattice.hpp"

using namespace aniso;

TEST_SUITE_BEGIN("lattice");

TEST_CASE("box sizes and edge classes") {
    SUBCASE("chain (1+0, N=1)") {
        BoxGeometry box = build_box(1, 0, 1);
        CHECK(box.vertex_count() == 3);
        CHECK(box.edge_count() == 2);
        for (int e = 0; e < box.edge_count(); ++e)
            CHECK(box.edge_class[e] == EdgeClass::planar);
    }
    SUBCASE("square lattice slice (1+1, N=1)") {
        BoxGeometry box = build_box(1, 1, 1);
        CHECK(box.vertex_count() == 9);
        CHECK(box.edge_count() == 12);
        int planar = 0, vertical = 0;
        for (int e = 0; e < box.edge_count(); ++e)
            (box.edge_class[e] == EdgeClass::planar ? planar : vertical) += 1;
        CHECK(planar == 6);
        CHECK(vertical == 6);
    }
    SUBCASE("planar square (2+0, N=1)") {
        BoxGeometry box = build_box(2, 0, 1);
        CHECK(box.vertex_count() == 9);
        CHECK(box.edge_count() == 12);
        for (int e = 0; e < box.edge_count(); ++e)
            CHECK(box.edge_class[e] == EdgeClass::planar);
    }
    SUBCASE("degenerate dimensions rejected") {
        CHECK_THROWS_AS(build_box(0, 0, 1), std::invalid_argument);
        CHECK_THROWS_AS(build_box(1, 0, -1), std::invalid_argument);
    }
}

TEST_CASE("edge classification counts factorize") {
    // planar edges: one d-dimensional box worth per vertical column, and
    // symmetrically for vertical edges
    auto planar_count = [](const BoxGeometry& box) {
        int n = 0;
        for (int e = 0; e < box.edge_count(); ++e)
            if (box.edge_class[e] == EdgeClass::planar) ++n;
        return n;
    };
    BoxGeometry d1 = build_box(1, 0, 1);
    BoxGeometry d2 = build_box(2, 0, 1);
    BoxGeometry s1 = build_box(1, 0, 1);  // the vertical factor is also a chain

    BoxGeometry box11 = build_box(1, 1, 1);
    CHECK(planar_count(box11) == 3 * d1.edge_count());
    CHECK(box11.edge_count() - planar_count(box11) == 3 * s1.edge_count());

    BoxGeometry box21 = build_box(2, 1, 1);
    CHECK(box21.vertex_count() == 27);
    CHECK(planar_count(box21) == 3 * d2.edge_count());
    CHECK(box21.edge_count() - planar_count(box21) == 9 * s1.edge_count());
}

TEST_CASE("slabs") {
    BoxGeometry box = build_box(1, 1, 1);
    SUBCASE("central and top slabs of the (1+1) box") {
        for (int w : {0, 1, -1}) {
            Slab slab = slab_of(box, {w});
            CHECK(slab.vertices.size() == 3);
            CHECK(slab.edges.count() == 2);
            for (int e : slab.edges.indices())
                CHECK(box.edge_class[e] == EdgeClass::planar);
        }
    }
    SUBCASE("(2+1) slab is a full 3x3 grid") {
        BoxGeometry big = build_box(2, 1, 1);
        Slab slab = slab_of(big, {-1});
        CHECK(slab.vertices.size() == 9);
        CHECK(slab.edges.count() == 12);
    }
    SUBCASE("out-of-range coordinate rejected") {
        CHECK_THROWS_AS(slab_of(box, {2}), std::invalid_argument);
        CHECK_THROWS_AS(slab_of(box, {0, 0}), std::invalid_argument);
    }
}

TEST_CASE("cancelled sets under the canonical step order") {
    BoxGeometry box = build_box(1, 1, 1);
    const EdgeSet universe = box.graph.all_edges();
    const int center = box.vertex_index({0, 0});

    SUBCASE("minimal step cancels only itself") {
        // +e_1 is first in the order, so its cancelled set is a singleton
        int right = box.vertex_index({1, 0});
        EdgeSet g = box.graph.cancelled_set({center, right}, universe);
        CHECK(g.count() == 1);
        CHECK(g.test(box.graph.edge_between(center, right)));
    }
    SUBCASE("maximal step at an interior vertex cancels everything incident") {
        // -f_1 is last in the order: all 4 incident edges are cancelled
        int below = box.vertex_index({0, -1});
        EdgeSet g = box.graph.cancelled_set({center, below}, universe);
        CHECK(g.count() == 4);
    }
    SUBCASE("corner vertex: maximal available direction cancels both edges") {
        int corner = box.vertex_index({-1, -1});
        int up = box.vertex_index({-1, 0});
        EdgeSet g = box.graph.cancelled_set({corner, up}, universe);
        CHECK(g.count() == 2);
        CHECK(g.test(box.graph.edge_between(corner, up)));
        CHECK(g.test(box.graph.edge_between(corner, box.vertex_index({0, -1}))));
    }
    SUBCASE("every step cancels its own edge") {
        for (int v = 0; v < box.vertex_count(); ++v)
            for (const auto& arc : box.graph.adjacency(v)) {
                EdgeSet g = box.graph.cancelled_set({v, arc.to}, universe);
                CHECK(g.test(arc.edge));
            }
    }
    SUBCASE("monotone in the step order") {
        for (int v = 0; v < box.vertex_count(); ++v) {
            EdgeSet previous(box.edge_count());
            for (const auto& arc : box.graph.adjacency(v)) {
                EdgeSet g = box.graph.cancelled_set({v, arc.to}, universe);
                CHECK(previous.is_subset_of(g));
                previous = g;
            }
        }
    }
    SUBCASE("restricting the universe restricts the cancelled set") {
        EdgeSet small(box.edge_count());
        int i = 0;
        for (int e = 0; e < box.edge_count(); ++e)
            if (++i % 2 == 0) small.set(e);
        int below = box.vertex_index({0, -1});
        if (small.test(box.graph.edge_between(center, below))) {
            EdgeSet g = box.graph.cancelled_set({center, below}, small);
            EdgeSet full = box.graph.cancelled_set({center, below}, universe);
            CHECK(g.is_subset_of(full));
            CHECK(g.is_subset_of(small));
        }
    }
}

TEST_CASE("construction is deterministic") {
    BoxGeometry a = build_box(2, 1, 1);
    BoxGeometry b = build_box(2, 1, 1);
    REQUIRE(a.edge_count() == b.edge_count());
    for (int e = 0; e < a.edge_count(); ++e) {
        CHECK(a.graph.endpoints(e) == b.graph.endpoints(e));
        CHECK(a.edge_class[e] == b.edge_class[e]);
    }
    for (int v = 0; v < a.vertex_count(); ++v) {
        REQUIRE(a.graph.adjacency(v).size() == b.graph.adjacency(v).size());
        for (size_t i = 0; i < a.graph.adjacency(v).size(); ++i) {
            CHECK(a.graph.adjacency(v)[i].to == b.graph.adjacency(v)[i].to);
            CHECK(a.graph.adjacency(v)[i].edge == b.graph.adjacency(v)[i].edge);
        }
    }
    CHECK(a.coord == b.coord);
}

TEST_CASE("coordinates round-trip through indices") {
    BoxGeometry box = build_box(2, 1, 1);
    for (int v = 0; v < box.vertex_count(); ++v)
        CHECK(box.vertex_index(box.coord[v]) == v);
    CHECK_THROWS_AS(box.vertex_index({2, 0, 0}), std::invalid_argument);
}

TEST_CASE("edge weights follow the edge class") {
    BoxGeometry box = build_box(1, 1, 1);
    EdgeWeights w = edge_weights(box, Couplings{0.44, 0.17});
    for (int e = 0; e < box.edge_count(); ++e)
        CHECK(w[e] == (box.edge_class[e] == EdgeClass::planar ? 0.44 : 0.17));
    CHECK_THROWS_AS(edge_weights(box, Couplings{-0.1, 0.2}), std::invalid_argument);
}

TEST_SUITE_END();
