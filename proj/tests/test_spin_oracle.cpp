#include <doctest.h>

#include <cmath>
#include <random>

#include "aniso/caps.hpp"
#include "aniso/instances.hpp"
#include "aniso/lattice.hpp"
#include "aniso/spin_oracle.hpp"

using namespace aniso;
using doctest::Approx;

TEST_SUITE_BEGIN("spin-oracle");

TEST_CASE("partition function closed forms") {
    SUBCASE("single edge") {
        Graph g = single_edge_graph();
        CHECK(partition_spin(g, {1.0}) == Approx(std::cosh(1.0)).epsilon(1e-12));
    }
    SUBCASE("path of 3 vertices: a tree contributes only cosh factors") {
        Graph g = path_graph(3);
        CHECK(partition_spin(g, {0.7, 0.7}) ==
              Approx(std::cosh(0.7) * std::cosh(0.7)).epsilon(1e-12));
    }
    SUBCASE("4-cycle picks up the even-cycle term") {
        Graph g = cycle_graph(4);
        double J = 0.6, c = std::cosh(J), t = std::tanh(J);
        CHECK(partition_spin(g, EdgeWeights(4, J)) ==
              Approx(c * c * c * c * (1.0 + t * t * t * t)).epsilon(1e-12));
    }
    SUBCASE("zero couplings normalize to 1") {
        Graph g = cycle_graph(4);
        CHECK(partition_spin(g, EdgeWeights(4, 0.0)) == Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("two-point closed forms") {
    SUBCASE("coinciding arguments") {
        Graph g = path_graph(3);
        CHECK(two_point_spin(g, {0.4, 0.9}, 1, 1) == 1.0);
    }
    SUBCASE("single edge") {
        Graph g = single_edge_graph();
        CHECK(two_point_spin(g, {0.8}, 0, 1) == Approx(std::tanh(0.8)).epsilon(1e-12));
    }
    SUBCASE("adjacent pair on the 4-cycle") {
        Graph g = cycle_graph(4);
        double J = 0.45, t = std::tanh(J);
        CHECK(two_point_spin(g, EdgeWeights(4, J), 0, 1) ==
              Approx((t + t * t * t) / (1.0 + t * t * t * t)).epsilon(1e-12));
    }
}

TEST_CASE("symmetry and positivity") {
    std::mt19937_64 rng(411u);
    for (int trial = 0; trial < 10; ++trial) {
        Instance inst = random_connected_instance(rng, {});
        int n = inst.graph.vertex_count();
        int x = int(rng() % uint64_t(n));
        int y = int(rng() % uint64_t(n));
        double fwd = two_point_spin(inst.graph, inst.weights, x, y);
        double bwd = two_point_spin(inst.graph, inst.weights, y, x);
        CHECK(fwd == Approx(bwd).epsilon(1e-12));
        CHECK(fwd >= 0.0);
        CHECK(fwd <= 1.0 + 1e-12);
    }
}

TEST_CASE("vertical decoupling at J_s = 0") {
    BoxGeometry box = build_box(1, 1, 1);
    EdgeWeights w = edge_weights(box, Couplings{0.5, 0.0});
    int a = box.vertex_index({0, 0});
    int b = box.vertex_index({0, 1});
    int c = box.vertex_index({1, 0});
    SUBCASE("cross-slab correlations vanish") {
        CHECK(two_point_spin(box.graph, w, a, b) == Approx(0.0).epsilon(1e-14));
    }
    SUBCASE("in-slab correlations equal the planar value") {
        Graph chain = path_graph(3);
        double planar = two_point_spin(chain, {0.5, 0.5}, 1, 2);
        CHECK(two_point_spin(box.graph, w, a, c) == Approx(planar).epsilon(1e-12));
    }
}

TEST_CASE("finite-volume susceptibility") {
    SUBCASE("three-site chain at J = 0.5") {
        BoxGeometry box = build_box(1, 0, 1);
        CHECK(susceptibility_finite_spin(box, {0.5, 0.0}) ==
              Approx(1.0 + 2.0 * std::tanh(0.5)).epsilon(1e-12));
    }
    SUBCASE("free spins") {
        BoxGeometry box = build_box(1, 1, 1);
        CHECK(susceptibility_finite_spin(box, {0.0, 0.0}) == Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("frozen regression value for the (1+1) N=1 box") {
        BoxGeometry box = build_box(1, 1, 1);
        CHECK(susceptibility_finite_spin(box, {0.3, 0.1}) ==
              Approx(2.07023818474418).epsilon(1e-12));
    }
    SUBCASE("sup is attained at the center of the chain") {
        BoxGeometry box = build_box(1, 0, 2);
        EdgeWeights w = edge_weights(box, Couplings{0.4, 0.0});
        std::vector<double> rows =
            two_point_row_sums_spin(box.graph, w, box.graph.all_edges());
        int center = box.vertex_index({0});
        for (size_t v = 0; v < rows.size(); ++v) CHECK(rows[center] >= rows[v] - 1e-14);
    }
}

TEST_CASE("m2 proxy on small graphs") {
    // with zero couplings <M^2> = |V| exactly, so the per-site proxy is 1
    Graph g = cycle_graph(4);
    CHECK(m2_per_site_spin(g, EdgeWeights(4, 0.0)) == Approx(1.0).epsilon(1e-13));
    // strictly increasing in the coupling
    CHECK(m2_per_site_spin(g, EdgeWeights(4, 0.4)) >
          m2_per_site_spin(g, EdgeWeights(4, 0.2)));
}

TEST_CASE("vertex cap enforced") {
    Graph g = path_graph(caps().max_spin_vertices + 1);
    EdgeWeights w(g.edge_count(), 0.2);
    CHECK_THROWS_AS(partition_spin(g, w), cap_error);
    CHECK_THROWS_AS(two_point_spin(g, w, 0, 1), cap_error);
}

TEST_CASE("weight validation") {
    Graph g = single_edge_graph();
    CHECK_THROWS_AS(partition_spin(g, EdgeWeights{}), std::invalid_argument);
}

TEST_SUITE_END();
