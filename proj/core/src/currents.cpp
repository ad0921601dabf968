#include "aniso/currents.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

#include "aniso/numerics.hpp"

namespace aniso {
namespace {

// BFS over the universe in vertex/step order; fills parent arcs and depths.
// Roots are the smallest unvisited vertices, so the forest is deterministic.
struct Forest {
    std::vector<int> parent_vertex;  // -1 at roots / unreached
    std::vector<int> parent_edge;
    std::vector<int> depth;
    EdgeSet edges;
};

Forest bfs_forest(const Graph& g, const EdgeSet& universe) {
    Forest f{std::vector<int>(g.vertex_count(), -1),
             std::vector<int>(g.vertex_count(), -1),
             std::vector<int>(g.vertex_count(), -1), EdgeSet(g.edge_count())};
    std::queue<int> q;
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (f.depth[root] != -1) continue;
        f.depth[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Graph::Arc& a : g.adjacency(v)) {
                if (!universe.test(a.edge) || f.depth[a.to] != -1) continue;
                f.depth[a.to] = f.depth[v] + 1;
                f.parent_vertex[a.to] = v;
                f.parent_edge[a.to] = a.edge;
                f.edges.set(a.edge);
                q.push(a.to);
            }
        }
    }
    return f;
}

// Edge set of the forest path between two vertices of the same component.
EdgeSet forest_path(const Graph& g, const Forest& f, int x, int y) {
    EdgeSet path(g.edge_count());
    int a = x, b = y;
    while (f.depth[a] > f.depth[b]) {
        path.flip(f.parent_edge[a]);
        a = f.parent_vertex[a];
    }
    while (f.depth[b] > f.depth[a]) {
        path.flip(f.parent_edge[b]);
        b = f.parent_vertex[b];
    }
    while (a != b) {
        path.flip(f.parent_edge[a]);
        path.flip(f.parent_edge[b]);
        a = f.parent_vertex[a];
        b = f.parent_vertex[b];
    }
    return path;
}

} // namespace

CycleBasis cycle_basis(const Graph& g, const EdgeSet& universe) {
    Forest f = bfs_forest(g, universe);
    CycleBasis basis;
    basis.forest = f.edges;
    universe.for_each([&](int e) {
        if (f.edges.test(e)) return;
        auto [u, v] = g.endpoints(e);
        EdgeSet cycle = forest_path(g, f, u, v);
        cycle.set(e);
        basis.cycles.push_back(std::move(cycle));
    });
    return basis;
}

std::optional<EdgeSet> reference_odd_set(const Graph& g, const EdgeSet& universe,
                                         int x, int y) {
    if (x == y) throw std::invalid_argument("reference_odd_set: x and y must differ");
    Forest f = bfs_forest(g, universe);
    // connectivity: walk both vertices to their roots
    int rx = x, ry = y;
    while (f.parent_vertex[rx] != -1) rx = f.parent_vertex[rx];
    while (f.parent_vertex[ry] != -1) ry = f.parent_vertex[ry];
    if (rx != ry) return std::nullopt;
    return forest_path(g, f, x, y);
}

std::vector<int> sources_of(const Graph& g, const EdgeSet& odd) {
    std::vector<int> degree(g.vertex_count(), 0);
    odd.for_each([&](int e) {
        auto [u, v] = g.endpoints(e);
        ++degree[u];
        ++degree[v];
    });
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (degree[v] % 2) out.push_back(v);
    return out;
}

namespace {

// Σ over the xor-span of the basis (shifted by `start`) of Π tanh(J_b).
// The tanh product is recomputed from the bits of each subgraph rather than
// updated multiplicatively, so there is no drift across millions of terms.
double tanh_span_sum(const EdgeWeights& J, const CycleBasis& basis,
                     const EdgeSet& start) {
    std::vector<double> th(J.size());
    for (size_t e = 0; e < J.size(); ++e) th[e] = std::tanh(J[e]);
    KahanSum total;
    detail::span_subgraphs(basis, start, [&](const EdgeSet& sub) {
        double prod = 1.0;
        sub.for_each([&](int e) { prod *= th[e]; });
        total.add(prod);
    });
    return total.value();
}

} // namespace

double even_tanh_sum(const Graph& g, const EdgeWeights& J, const EdgeSet& universe) {
    return tanh_span_sum(J, cycle_basis(g, universe), EdgeSet(g.edge_count()));
}

double sourced_tanh_sum(const Graph& g, const EdgeWeights& J, const EdgeSet& universe,
                        int x, int y) {
    auto ref = reference_odd_set(g, universe, x, y);
    if (!ref) return 0.0;
    return tanh_span_sum(J, cycle_basis(g, universe), *ref);
}

double log_cosh_sum(const EdgeWeights& J, const EdgeSet& universe) {
    KahanSum s;
    universe.for_each([&](int e) { s.add(std::log(std::cosh(J[e]))); });
    return s.value();
}

double partition_currents(const Graph& g, const EdgeWeights& J, const EdgeSet& universe) {
    return std::exp(log_cosh_sum(J, universe)) * even_tanh_sum(g, J, universe);
}

double partition_currents(const Graph& g, const EdgeWeights& J) {
    return partition_currents(g, J, g.all_edges());
}

double sourced_sum(const Graph& g, const EdgeWeights& J, const EdgeSet& universe,
                   int x, int y) {
    return std::exp(log_cosh_sum(J, universe)) * sourced_tanh_sum(g, J, universe, x, y);
}

double sourced_sum(const Graph& g, const EdgeWeights& J, int x, int y) {
    return sourced_sum(g, J, g.all_edges(), x, y);
}

double two_point_currents(const Graph& g, const EdgeWeights& J, const EdgeSet& universe,
                          int x, int y) {
    if (x == y) return 1.0;
    double s = sourced_tanh_sum(g, J, universe, x, y);
    if (s == 0.0) return 0.0;
    return s / even_tanh_sum(g, J, universe);
}

double two_point_currents(const Graph& g, const EdgeWeights& J, int x, int y) {
    return two_point_currents(g, J, g.all_edges(), x, y);
}

double constrained_sourceless_ratio(const Graph& g, const EdgeWeights& J,
                                    const EdgeSet& universe, const EdgeSet& evenOn) {
    if (!evenOn.is_subset_of(universe))
        throw std::invalid_argument("constrained_sourceless_ratio: evenOn outside universe");
    return even_tanh_sum(g, J, universe.and_not(evenOn)) /
           even_tanh_sum(g, J, universe);
}

std::vector<double> two_point_row_sums_currents(const Graph& g, const EdgeWeights& J,
                                                const EdgeSet& universe,
                                                const std::vector<int>& vertices) {
    double t = even_tanh_sum(g, J, universe);
    std::vector<double> out;
    out.reserve(vertices.size());
    for (int x : vertices) {
        KahanSum row;
        row.add(1.0);  // y = x
        for (int y : vertices) {
            if (y == x) continue;
            row.add(sourced_tanh_sum(g, J, universe, x, y) / t);
        }
        out.push_back(row.value());
    }
    return out;
}

double susceptibility_currents(const Graph& g, const EdgeWeights& J,
                               const EdgeSet& universe, const std::vector<int>& vertices) {
    double best = 0.0;
    for (double r : two_point_row_sums_currents(g, J, universe, vertices))
        best = std::max(best, r);
    return best;
}

ConsistentPath backbone_map(const Graph& g, const ParityConfig& config, int x, int y) {
    if (!config.odd.is_subset_of(config.universe))
        throw std::invalid_argument("backbone_map: odd set outside universe");
    std::vector<int> src = sources_of(g, config.odd);
    if (src.size() != 2 || src[0] != std::min(x, y) || src[1] != std::max(x, y))
        throw std::invalid_argument("backbone_map: sources of the class are not {x, y}");

    EdgeSet remaining = config.odd;
    std::vector<int> walk{x};
    int v = x;
    while (v != y) {
        const Graph::Arc* pick = nullptr;
        for (const Graph::Arc& a : g.adjacency(v)) {
            if (remaining.test(a.edge)) {
                pick = &a;
                break;
            }
        }
        if (!pick)
            // impossible by the degree-parity argument; a failure here means
            // the class was malformed
            throw std::logic_error("backbone_map: walk stuck before reaching y");
        remaining.reset(pick->edge);
        walk.push_back(pick->to);
        v = pick->to;
    }
    // Consistency of the result is a theorem under this traversal rule;
    // make_consistent_path re-validates it.
    return make_consistent_path(g, config.universe, walk);
}

} // namespace aniso
