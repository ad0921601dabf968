#include "aniso/backbone.hpp"

#include <cmath>
#include <stdexcept>

#include "aniso/numerics.hpp"
#include "aniso/spin_oracle.hpp"

namespace aniso {

std::vector<ConsistentPath> enumerate_consistent_paths(const Graph& g,
                                                       const EdgeSet& universe,
                                                       int x, int y, int max_len) {
    if (x == y)
        throw std::invalid_argument("enumerate_consistent_paths: x and y must differ");
    std::vector<ConsistentPath> out;
    for_each_consistent_path(
        g, universe, x,
        [&](const ConsistentPath& p) {
            if (p.target() == y) out.push_back(p);
        },
        max_len);
    return out;
}

double rho(const Graph& g, const EdgeWeights& J, const EdgeSet& universe,
           const ConsistentPath& path) {
    // Re-derive the cancelled set within this universe; validates consistency.
    ConsistentPath p = make_consistent_path(g, universe, path.vertices);
    double tanh_product = 1.0;
    for (int e : p.edges) tanh_product *= std::tanh(J[e]);
    return tanh_product * constrained_sourceless_ratio(g, J, universe, p.cancelled);
}

ExpansionReport backbone_expansion_check(const Graph& g, const EdgeWeights& J,
                                         int x, int y, double tolerance) {
    ExpansionReport report;
    KahanSum sum;
    for (const ConsistentPath& p :
         enumerate_consistent_paths(g, g.all_edges(), x, y)) {
        double value = rho(g, J, g.all_edges(), p);
        sum.add(value);
        report.contributions.push_back({p, value});
    }
    report.expansion_sum = sum.value();
    report.oracle = two_point_spin(g, J, x, y);
    report.relative_error = rel_err(report.expansion_sum, report.oracle);
    report.pass = report.relative_error <= tolerance;
    return report;
}

bool check_property_a(const Graph& g, const EdgeWeights& J, const EdgeSet& universeU,
                      const EdgeSet& universeE, const std::vector<int>& path_vertices,
                      double slack) {
    if (!universeU.is_subset_of(universeE))
        throw std::invalid_argument("check_property_a: U must be contained in E");
    ConsistentPath in_u = make_consistent_path(g, universeU, path_vertices);
    double rho_e = rho(g, J, universeE, in_u);
    double rho_u = rho(g, J, universeU, in_u);
    return rho_e <= rho_u + slack;
}

bool check_property_b(const Graph& g, const EdgeWeights& J, const EdgeSet& universe,
                      const std::vector<int>& front, const std::vector<int>& back,
                      double rel_tolerance) {
    if (front.empty() || back.empty() || front.back() != back.front())
        throw std::invalid_argument("check_property_b: pieces do not concatenate");
    std::vector<int> whole = front;
    whole.insert(whole.end(), back.begin() + 1, back.end());
    ConsistentPath whole_path = make_consistent_path(g, universe, whole);
    double lhs = rho(g, J, universe, whole_path);

    ConsistentPath front_path = make_consistent_path(g, universe, front);
    double rhs = rho(g, J, universe, front_path);
    EdgeSet rest = universe.and_not(front_path.cancelled);
    ConsistentPath back_path = make_consistent_path(g, rest, back);
    rhs *= rho(g, J, rest, back_path);

    return rel_err(lhs, rhs) <= rel_tolerance;
}

bool check_tanh_bound(const Graph& g, const EdgeWeights& J, const EdgeSet& universe,
                      const ConsistentPath& path, double slack) {
    double tanh_product = 1.0;
    for (int e : path.edges) tanh_product *= std::tanh(J[e]);
    return rho(g, J, universe, path) <= tanh_product + slack;
}

PathSplit split_path(const BoxGeometry& box, const EdgeSet& universe,
                     const ConsistentPath& path) {
    if (box.s < 1)
        throw std::invalid_argument("split_path: box has no vertical directions");
    PathSplit split;
    size_t i = 0;
    const auto& verts = path.vertices;
    while (true) {
        // maximal planar run starting at vertex i (possibly empty)
        std::vector<int> piece{verts[i]};
        size_t j = i;
        while (j < path.edges.size() &&
               box.edge_class[path.edges[j]] == EdgeClass::planar) {
            piece.push_back(verts[j + 1]);
            ++j;
        }
        split.pieces.push_back(make_consistent_path(box.graph, universe, piece));
        split.t_anchor.push_back(box.vertical_of(verts[i]));
        if (j == path.edges.size()) break;
        split.vertical_edges.push_back(path.edges[j]);  // the vertical step s_k
        i = j + 1;
    }
    return split;
}

std::vector<int> concat_split(const PathSplit& split) {
    std::vector<int> out;
    // each vertical step's target is the first vertex of the next piece, so
    // appending the pieces in order reproduces the full vertex sequence
    for (const ConsistentPath& piece : split.pieces)
        out.insert(out.end(), piece.vertices.begin(), piece.vertices.end());
    return out;
}

double splitting_bound_value(const BoxGeometry& box, const EdgeWeights& J,
                             const EdgeSet& universe, const ConsistentPath& path,
                             int* n_out) {
    PathSplit split = split_path(box, universe, path);
    EdgeSet prefix_cancelled(box.edge_count());
    double bound = 1.0;
    for (size_t k = 0; k < split.pieces.size(); ++k) {
        const ConsistentPath& piece = split.pieces[k];
        // slab universe of this piece, minus everything the prefix cancelled
        Slab slab = slab_of(box, split.t_anchor[k]);
        EdgeSet slab_universe = (slab.edges & universe).and_not(prefix_cancelled);
        bound *= rho(box.graph, J, slab_universe, piece);
        prefix_cancelled |= cancelled_set_of(box.graph, universe, piece.vertices);
        if (k < split.vertical_edges.size()) {
            int e = split.vertical_edges[k];
            bound *= std::tanh(J[e]);
            prefix_cancelled |=
                box.graph.cancelled_set_via(piece.vertices.back(), e, universe);
        }
    }
    if (n_out) *n_out = split.n();
    return bound;
}

bool check_splitting_bound(const BoxGeometry& box, const EdgeWeights& J,
                           const EdgeSet& universe, const ConsistentPath& path,
                           double slack) {
    double lhs = rho(box.graph, J, universe, path);
    return lhs <= splitting_bound_value(box, J, universe, path) + slack;
}

} // namespace aniso
