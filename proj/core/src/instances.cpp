#include "aniso/instances.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace aniso {

Graph single_edge_graph() {
    Graph g(2);
    g.add_edge(0, 1);
    g.sort_adjacency_by_neighbor();
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: need at least one vertex");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    g.sort_adjacency_by_neighbor();
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least three vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    g.sort_adjacency_by_neighbor();
    return g;
}

Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid_graph: empty grid");
    Graph g(rows * cols);
    auto at = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(at(r, c), at(r, c + 1));
            if (r + 1 < rows) g.add_edge(at(r, c), at(r + 1, c));
        }
    g.sort_adjacency_by_neighbor();
    return g;
}

Graph branched_tree_graph() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    g.add_edge(2, 4);
    g.sort_adjacency_by_neighbor();
    return g;
}

double unit_uniform(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

EdgeWeights log_uniform_weights(std::mt19937_64& rng, int count, double weight_min,
                                double weight_max) {
    if (!(0.0 < weight_min && weight_min <= weight_max))
        throw std::invalid_argument("log_uniform_weights: bad range");
    EdgeWeights w(count);
    const double lo = std::log(weight_min), hi = std::log(weight_max);
    for (double& x : w) x = std::exp(lo + (hi - lo) * unit_uniform(rng));
    return w;
}

Instance random_connected_instance(std::mt19937_64& rng, const RandomGraphSpec& spec) {
    if (spec.min_vertices < 2 || spec.max_vertices < spec.min_vertices)
        throw std::invalid_argument("random_connected_instance: bad vertex range");
    int n = spec.min_vertices +
            int(rng() % uint64_t(spec.max_vertices - spec.min_vertices + 1));

    Graph g(n);
    std::set<std::pair<int, int>> used;
    // random attachment tree keeps the graph connected
    for (int v = 1; v < n; ++v) {
        int parent = int(rng() % uint64_t(v));
        g.add_edge(parent, v);
        used.insert({std::min(parent, v), std::max(parent, v)});
    }

    int allowed = std::min(spec.max_edges - (n - 1), spec.max_cyclomatic);
    if (allowed > 0) {
        int extra = int(rng() % uint64_t(allowed + 1));
        std::vector<std::pair<int, int>> candidates;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!used.count({u, v})) candidates.push_back({u, v});
        std::shuffle(candidates.begin(), candidates.end(), rng);
        for (int k = 0; k < extra && k < int(candidates.size()); ++k)
            g.add_edge(candidates[k].first, candidates[k].second);
    }
    g.sort_adjacency_by_neighbor();
    EdgeWeights weights =
        log_uniform_weights(rng, g.edge_count(), spec.weight_min, spec.weight_max);
    return {std::move(g), std::move(weights)};
}

} // namespace aniso
