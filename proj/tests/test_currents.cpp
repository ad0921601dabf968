#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "aniso/caps.hpp"
#include "aniso/currents.hpp"
#include "aniso/instances.hpp"
#include "aniso/lattice.hpp"
#include "aniso/numerics.hpp"
#include "aniso/spin_oracle.hpp"

using namespace aniso;
using doctest::Approx;

TEST_SUITE_BEGIN("currents");

TEST_CASE("cycle basis") {
    SUBCASE("trees have empty cycle space") {
        Graph g = branched_tree_graph();
        CHECK(cycle_basis(g, g.all_edges()).dim() == 0);
    }
    SUBCASE("4-cycle has one basis element: the full cycle") {
        Graph g = cycle_graph(4);
        CycleBasis basis = cycle_basis(g, g.all_edges());
        REQUIRE(basis.dim() == 1);
        CHECK(basis.cycles[0].count() == 4);
    }
    SUBCASE("3x3 grid has cyclomatic number 4") {
        Graph g = grid_graph(3, 3);
        CHECK(cycle_basis(g, g.all_edges()).dim() == 4);
        // every basis element is even
        CycleBasis basis = cycle_basis(g, g.all_edges());
        for (const EdgeSet& cycle : basis.cycles)
            CHECK(sources_of(g, cycle).empty());
    }
}

TEST_CASE("sourceless partition sums") {
    SUBCASE("single edge: only the empty even subgraph") {
        Graph g = single_edge_graph();
        CHECK(partition_currents(g, {0.9}) == Approx(std::cosh(0.9)).epsilon(1e-12));
    }
    SUBCASE("trees: product of cosh factors") {
        Graph g = branched_tree_graph();
        EdgeWeights w{0.3, 0.7, 0.45, 0.52};
        double expected = 1.0;
        for (double J : w) expected *= std::cosh(J);
        CHECK(partition_currents(g, w) == Approx(expected).epsilon(1e-12));
    }
    SUBCASE("4-cycle: empty plus full-cycle terms") {
        Graph g = cycle_graph(4);
        double J = 0.5, c = std::cosh(J), s = std::sinh(J);
        CHECK(partition_currents(g, EdgeWeights(4, J)) ==
              Approx(c * c * c * c + s * s * s * s).epsilon(1e-12));
    }
}

TEST_CASE("sourced sums") {
    SUBCASE("single edge") {
        Graph g = single_edge_graph();
        CHECK(sourced_sum(g, {0.9}, 0, 1) == Approx(std::sinh(0.9)).epsilon(1e-12));
    }
    SUBCASE("path x-a-y: the unique sourced subgraph is the whole path") {
        Graph g = path_graph(3);
        double J = 0.6, s = std::sinh(J);
        CHECK(sourced_sum(g, {J, J}, 0, 2) == Approx(s * s).epsilon(1e-12));
    }
    SUBCASE("adjacent pair on the 4-cycle: the two arcs") {
        Graph g = cycle_graph(4);
        double J = 0.5, c = std::cosh(J), s = std::sinh(J);
        CHECK(sourced_sum(g, EdgeWeights(4, J), 0, 1) ==
              Approx(s * c * c * c + s * s * s * c).epsilon(1e-12));
    }
    SUBCASE("disconnected pair contributes zero") {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        g.sort_adjacency_by_neighbor();
        CHECK(sourced_sum(g, {0.4, 0.4}, 0, 2) == 0.0);
    }
}

TEST_CASE("identities against the spin oracle") {
    std::mt19937_64 rng(1207u);
    for (int trial = 0; trial < 25; ++trial) {
        Instance inst = random_connected_instance(rng, {});
        double zc = partition_currents(inst.graph, inst.weights);
        double zs = partition_spin(inst.graph, inst.weights);
        CHECK(rel_err(zc, zs) <= 1e-10);
        int n = inst.graph.vertex_count();
        int x = int(rng() % uint64_t(n));
        int y = int(rng() % uint64_t(n - 1));
        if (y >= x) ++y;
        CHECK(rel_err(sourced_sum(inst.graph, inst.weights, x, y) / zc,
                      two_point_spin(inst.graph, inst.weights, x, y)) <= 1e-10);
    }
}

TEST_CASE("parity soundness of the enumerations") {
    std::mt19937_64 rng(88u);
    Instance inst = random_connected_instance(rng, {});
    const Graph& g = inst.graph;
    int checked = 0;
    for_each_even_subgraph(g, g.all_edges(), [&](const EdgeSet& sub) {
        CHECK(sources_of(g, sub).empty());
        ++checked;
    });
    CHECK(checked >= 1);
    int x = 0, y = g.vertex_count() - 1;
    for_each_sourced_subgraph(g, g.all_edges(), x, y, [&](const EdgeSet& sub) {
        std::vector<int> sources = sources_of(g, sub);
        REQUIRE(sources.size() == 2);
        CHECK(std::min(sources[0], sources[1]) == std::min(x, y));
        CHECK(std::max(sources[0], sources[1]) == std::max(x, y));
    });
}

TEST_CASE("constrained sourceless ratio") {
    Graph g = cycle_graph(4);
    double J = 0.5, c = std::cosh(J), s = std::sinh(J);
    EdgeWeights w(4, J);
    SUBCASE("empty constraint is the trivial ratio") {
        CHECK(constrained_sourceless_ratio(g, w, g.all_edges(), EdgeSet(4)) == Approx(1.0));
    }
    SUBCASE("single-edge graph: the whole edge set constrained") {
        Graph e = single_edge_graph();
        CHECK(constrained_sourceless_ratio(e, {0.7}, e.all_edges(), e.all_edges()) == Approx(1.0));
    }
    SUBCASE("one constrained edge kills the cycle term") {
        EdgeSet one(4);
        one.set(0);
        double c4 = c * c * c * c, s4 = s * s * s * s;
        CHECK(constrained_sourceless_ratio(g, w, g.all_edges(), one) ==
              Approx(c4 / (c4 + s4)).epsilon(1e-12));
    }
    SUBCASE("value always in (0, 1]") {
        std::mt19937_64 rng(5u);
        Instance inst = random_connected_instance(rng, {});
        EdgeSet evenOn(inst.graph.edge_count());
        for (int e = 0; e < inst.graph.edge_count(); e += 2) evenOn.set(e);
        double r = constrained_sourceless_ratio(inst.graph, inst.weights,
                                              inst.graph.all_edges(), evenOn);
        CHECK(r > 0.0);
        CHECK(r <= 1.0 + 1e-12);
    }
}

TEST_CASE("backbone map") {
    SUBCASE("single odd edge maps to the one-step path") {
        Graph g = single_edge_graph();
        ConsistentPath p = backbone_map(g, {g.all_edges(), g.all_edges()}, 0, 1);
        CHECK(p.vertices == std::vector<int>{0, 1});
    }
    SUBCASE("odd path maps to itself") {
        Graph g = path_graph(3);
        ConsistentPath p = backbone_map(g, {g.all_edges(), g.all_edges()}, 0, 2);
        CHECK(p.vertices == std::vector<int>{0, 1, 2});
    }
    SUBCASE("cycle hanging off the path is walked before the exit step") {
        // path 0-1-2 with a triangle 1-3-4-1 inserted *before* edge {1,2} in
        // vertex 1's step order: the walk must tour the triangle first
        Graph g(5);
        g.add_edge(0, 1);
        g.add_edge(1, 3);
        g.add_edge(3, 4);
        g.add_edge(4, 1);
        g.add_edge(1, 2);
        ConsistentPath p = backbone_map(g, {g.all_edges(), g.all_edges()}, 0, 2);
        CHECK(p.vertices == std::vector<int>{0, 1, 3, 4, 1, 2});
        CHECK(p.edges.size() == 5);
    }
    SUBCASE("wrong sources rejected") {
        Graph g = path_graph(3);
        CHECK_THROWS_AS(backbone_map(g, {g.all_edges(), g.all_edges()}, 0, 1),
                        std::invalid_argument);
        EdgeSet empty(g.edge_count());
        CHECK_THROWS_AS(backbone_map(g, {empty, g.all_edges()}, 0, 2),
                        std::invalid_argument);
    }
}

TEST_CASE("cycle-space cap enforced") {
    // a 6x6 grid has cyclomatic number 25, above the 22-dimensional cap
    Graph g = grid_graph(6, 6);
    EdgeWeights w(g.edge_count(), 0.1);
    CHECK(g.edge_count() - g.vertex_count() + 1 > caps().max_cycle_dim);
    CHECK_THROWS_AS(even_tanh_sum(g, w, g.all_edges()), cap_error);
    CHECK_THROWS_AS(partition_currents(g, w), cap_error);
}

TEST_SUITE_END();
