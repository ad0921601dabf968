#pragma once

#include <vector>

#include "aniso/graph.hpp"

namespace aniso {

/// A consistent path: a vertex sequence z_0 ... z_k whose steps never use an
/// edge cancelled by an earlier step (each step cancels every edge at its
/// start vertex that precedes-or-equals it in the step order, including its
/// own edge).  Consistent paths are automatically edge-self-avoiding.
struct ConsistentPath {
    std::vector<int> vertices;  ///< z_0 ... z_k, k >= 0
    std::vector<int> edges;     ///< the k stepped edge indices
    EdgeSet cancelled;          ///< the cancelled set within the construction universe

    int length() const { return int(edges.size()); }
    int source() const { return vertices.front(); }
    int target() const { return vertices.back(); }
};

/// Union of the per-step cancelled sets of the vertex sequence, restricted to
/// `universe`.  Does not check consistency.
EdgeSet cancelled_set_of(const Graph& g, const EdgeSet& universe,
                         const std::vector<int>& vertices);

bool is_consistent(const Graph& g, const EdgeSet& universe,
                   const std::vector<int>& vertices);

/// Build a ConsistentPath from a vertex sequence, validating adjacency and
/// consistency within `universe`; throws std::invalid_argument on violation.
ConsistentPath make_consistent_path(const Graph& g, const EdgeSet& universe,
                                    const std::vector<int>& vertices);

} // namespace aniso
