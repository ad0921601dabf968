#pragma once

#include <random>

#include "aniso/graph.hpp"

namespace aniso {

/// Builders for the fixed test menagerie and for seeded random instances
/// used by the verification suites.  All graphs come with the canonical
/// neighbor-index step order installed.

Graph single_edge_graph();
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph grid_graph(int rows, int cols);

/// A fixed 5-vertex tree with a branch point (0-1, 0-2, 2-3, 2-4).
Graph branched_tree_graph();

struct RandomGraphSpec {
    int min_vertices = 4;
    int max_vertices = 20;
    int max_edges = 20;
    int max_cyclomatic = 12;
    double weight_min = 0.05;
    double weight_max = 1.5;
};

struct Instance {
    Graph graph;
    EdgeWeights weights;
};

/// Uniform double in [0, 1) from the top 53 bits of the generator; explicit
/// so the suites do not depend on library distribution internals.
double unit_uniform(std::mt19937_64& rng);

/// Log-uniform weights in [weight_min, weight_max].
EdgeWeights log_uniform_weights(std::mt19937_64& rng, int count, double weight_min,
                                double weight_max);

/// Random connected simple graph: a random attachment tree plus extra edges,
/// respecting the edge and cyclomatic limits; log-uniform weights.
Instance random_connected_instance(std::mt19937_64& rng, const RandomGraphSpec& spec = {});

} // namespace aniso
