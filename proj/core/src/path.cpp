#include "aniso/path.hpp"

#include <stdexcept>

namespace aniso {
namespace {

// First arc from u to v whose edge lies in the universe, or nullptr.
const Graph::Arc* find_arc(const Graph& g, const EdgeSet& universe, int u, int v) {
    for (const Graph::Arc& a : g.adjacency(u))
        if (a.to == v && universe.test(a.edge)) return &a;
    return nullptr;
}

} // namespace

EdgeSet cancelled_set_of(const Graph& g, const EdgeSet& universe,
                         const std::vector<int>& vertices) {
    EdgeSet cancel(g.edge_count());
    for (size_t i = 1; i < vertices.size(); ++i) {
        const Graph::Arc* arc = find_arc(g, universe, vertices[i - 1], vertices[i]);
        if (!arc)
            throw std::invalid_argument("cancelled_set_of: step not available in universe");
        cancel |= g.cancelled_set_via(vertices[i - 1], arc->edge, universe);
    }
    return cancel;
}

bool is_consistent(const Graph& g, const EdgeSet& universe,
                   const std::vector<int>& vertices) {
    EdgeSet cancel(g.edge_count());
    for (size_t i = 1; i < vertices.size(); ++i) {
        const Graph::Arc* arc = find_arc(g, universe, vertices[i - 1], vertices[i]);
        if (!arc) return false;
        if (cancel.test(arc->edge)) return false;
        cancel |= g.cancelled_set_via(vertices[i - 1], arc->edge, universe);
    }
    return true;
}

ConsistentPath make_consistent_path(const Graph& g, const EdgeSet& universe,
                                    const std::vector<int>& vertices) {
    if (vertices.empty())
        throw std::invalid_argument("make_consistent_path: empty vertex sequence");
    ConsistentPath p;
    p.vertices = vertices;
    p.cancelled = EdgeSet(g.edge_count());
    for (size_t i = 1; i < vertices.size(); ++i) {
        const Graph::Arc* arc = find_arc(g, universe, vertices[i - 1], vertices[i]);
        if (!arc)
            throw std::invalid_argument("make_consistent_path: step not available in universe");
        if (p.cancelled.test(arc->edge))
            throw std::invalid_argument("make_consistent_path: step uses a cancelled edge");
        p.edges.push_back(arc->edge);
        p.cancelled |= g.cancelled_set_via(vertices[i - 1], arc->edge, universe);
    }
    return p;
}

} // namespace aniso
