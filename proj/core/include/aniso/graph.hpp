#pragma once

#include <utility>
#include <vector>

#include "aniso/edge_set.hpp"

namespace aniso {

/// A directed step between adjacent vertices.
struct Step {
    int from = -1;
    int to = -1;
};

/// Finite weighted (multi)graph with an explicit step order.  The adjacency
/// list of each vertex is ordered, and that order *is* the total order on the
/// steps out of the vertex that the cancellation machinery uses.  General
/// graphs use neighbor-index order (`sort_adjacency_by_neighbor`); lattice
/// boxes install the canonical direction order explicitly.
class Graph {
public:
    struct Arc {
        int to = -1;
        int edge = -1;
    };

    Graph() = default;
    explicit Graph(int n) : adjacency_(n) {}

    int vertex_count() const { return int(adjacency_.size()); }
    int edge_count() const { return int(edges_.size()); }

    /// Append an edge; adjacency entries are appended at both endpoints in
    /// call order.  Returns the dense edge index.
    int add_edge(int u, int v);

    std::pair<int, int> endpoints(int e) const { return edges_[e]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<Arc>& adjacency(int v) const { return adjacency_[v]; }

    /// Install neighbor-index order at every vertex (ties broken by edge
    /// index).  This is the canonical step order for non-lattice graphs.
    void sort_adjacency_by_neighbor();

    /// Install an explicit step order at one vertex as a list of incident
    /// edge indices; must be a permutation of the current incident edges.
    void set_step_order(int v, const std::vector<int>& edges_in_order);

    /// First edge between u and v in u's step order, or -1.
    int edge_between(int u, int v) const;

    EdgeSet all_edges() const { return EdgeSet::full(edge_count()); }

    /// Cancelled set of the step (from -> to) restricted to `universe`: all
    /// edges at `from` that are present in the universe and whose step
    /// precedes-or-equals the step to `to`.  The stepped edge itself is
    /// always included (a step cancels its own edge).
    EdgeSet cancelled_set(const Step& step, const EdgeSet& universe) const;

    /// Same, with the stepped edge named explicitly (needed in multigraphs
    /// and when a path records which parallel edge it used).
    EdgeSet cancelled_set_via(int from, int via_edge, const EdgeSet& universe) const;

    /// Position of the step (from -> to) in `from`'s step order (0-based);
    /// exposed for order-property tests.
    int step_rank(const Step& step) const;

private:
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<Arc>> adjacency_;
};

/// Per-edge coupling values J_b, indexed like Graph::edges().
using EdgeWeights = std::vector<double>;

} // namespace aniso
