#include "aniso/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace aniso {

int Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("Graph::add_edge: endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph::add_edge: self-loops not supported");
    int e = int(edges_.size());
    edges_.emplace_back(u, v);
    adjacency_[u].push_back({v, e});
    adjacency_[v].push_back({u, e});
    return e;
}

void Graph::sort_adjacency_by_neighbor() {
    for (auto& list : adjacency_)
        std::sort(list.begin(), list.end(), [](const Arc& a, const Arc& b) {
            return a.to != b.to ? a.to < b.to : a.edge < b.edge;
        });
}

void Graph::set_step_order(int v, const std::vector<int>& edges_in_order) {
    auto& list = adjacency_[v];
    if (edges_in_order.size() != list.size())
        throw std::invalid_argument("Graph::set_step_order: wrong edge count");
    std::vector<Arc> reordered;
    reordered.reserve(list.size());
    for (int e : edges_in_order) {
        auto it = std::find_if(list.begin(), list.end(),
                               [e](const Arc& a) { return a.edge == e; });
        if (it == list.end())
            throw std::invalid_argument("Graph::set_step_order: edge not incident");
        reordered.push_back(*it);
    }
    list = std::move(reordered);
}

int Graph::edge_between(int u, int v) const {
    for (const Arc& a : adjacency_[u])
        if (a.to == v) return a.edge;
    return -1;
}

EdgeSet Graph::cancelled_set(const Step& step, const EdgeSet& universe) const {
    EdgeSet g(edge_count());
    for (const Arc& a : adjacency_[step.from]) {
        if (!universe.test(a.edge)) continue;
        g.set(a.edge);
        if (a.to == step.to) return g;
    }
    throw std::invalid_argument("Graph::cancelled_set: no such step in universe");
}

EdgeSet Graph::cancelled_set_via(int from, int via_edge, const EdgeSet& universe) const {
    EdgeSet g(edge_count());
    for (const Arc& a : adjacency_[from]) {
        if (!universe.test(a.edge)) continue;
        g.set(a.edge);
        if (a.edge == via_edge) return g;
    }
    throw std::invalid_argument("Graph::cancelled_set_via: edge not incident or not in universe");
}

int Graph::step_rank(const Step& step) const {
    int rank = 0;
    for (const Arc& a : adjacency_[step.from]) {
        if (a.to == step.to) return rank;
        ++rank;
    }
    throw std::invalid_argument("Graph::step_rank: no such step");
}

} // namespace aniso
