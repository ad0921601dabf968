#include "aniso/lattice.hpp"

#include <stdexcept>
#include <string>

namespace aniso {

int BoxGeometry::vertex_index(const std::vector<int>& c) const {
    if (int(c.size()) != dim())
        throw std::invalid_argument("BoxGeometry::vertex_index: wrong coordinate count");
    int idx = 0;
    for (int i = 0; i < dim(); ++i) {
        if (c[i] < -N || c[i] > N)
            throw std::invalid_argument("BoxGeometry::vertex_index: coordinate out of range");
        idx = idx * side() + (c[i] + N);
    }
    return idx;
}

Vertex BoxGeometry::vertex(int index) const {
    Vertex v;
    v.u.assign(coord[index].begin(), coord[index].begin() + d);
    v.t.assign(coord[index].begin() + d, coord[index].end());
    return v;
}

int BoxGeometry::origin() const {
    return vertex_index(std::vector<int>(dim(), 0));
}

std::vector<int> BoxGeometry::vertical_of(int index) const {
    return std::vector<int>(coord[index].begin() + d, coord[index].end());
}

BoxGeometry build_box(int d, int s, int N) {
    if (d < 0 || s < 0 || N < 0 || d + s < 1)
        throw std::invalid_argument("build_box: need d >= 0, s >= 0, N >= 0, d+s >= 1");
    BoxGeometry box;
    box.d = d;
    box.s = s;
    box.N = N;
    const int dim = d + s;
    const int side = 2 * N + 1;

    long long nv = 1;
    for (int i = 0; i < dim; ++i) {
        nv *= side;
        if (nv > 4'000'000)
            throw std::invalid_argument("build_box: box too large to materialize");
    }
    box.graph = Graph(int(nv));
    box.coord.assign(size_t(nv), std::vector<int>(dim));
    for (int v = 0; v < int(nv); ++v) {
        int rest = v;
        for (int i = dim - 1; i >= 0; --i) {
            box.coord[v][i] = rest % side - N;
            rest /= side;
        }
    }

    // Edges in (vertex, axis) order; remember the +axis edge at each vertex so
    // the per-vertex step order can be installed afterwards.
    std::vector<std::vector<int>> edge_up(size_t(nv), std::vector<int>(dim, -1));
    for (int v = 0; v < int(nv); ++v) {
        for (int a = 0; a < dim; ++a) {
            if (box.coord[v][a] == N) continue;
            std::vector<int> c = box.coord[v];
            ++c[a];
            int w = box.vertex_index(c);
            edge_up[v][a] = box.graph.add_edge(v, w);
            box.edge_class.push_back(a < d ? EdgeClass::planar : EdgeClass::vertical);
        }
    }

    // Canonical step order: +e_1, -e_1, ..., +e_d, -e_d, then the vertical
    // directions +f_1, -f_1, ..., +f_s, -f_s; absent directions (boundary)
    // are skipped.
    for (int v = 0; v < int(nv); ++v) {
        std::vector<int> order;
        order.reserve(2 * dim);
        for (int a = 0; a < dim; ++a) {
            if (edge_up[v][a] >= 0) order.push_back(edge_up[v][a]);
            if (box.coord[v][a] > -N) {
                std::vector<int> c = box.coord[v];
                --c[a];
                order.push_back(edge_up[box.vertex_index(c)][a]);
            }
        }
        box.graph.set_step_order(v, order);
    }
    return box;
}

Slab slab_of(const BoxGeometry& box, const std::vector<int>& w) {
    if (int(w.size()) != box.s)
        throw std::invalid_argument("slab_of: vertical coordinate has wrong length");
    for (int c : w)
        if (c < -box.N || c > box.N)
            throw std::invalid_argument("slab_of: vertical coordinate out of range");
    Slab slab;
    slab.box = &box;
    slab.w = w;
    slab.edges = EdgeSet(box.edge_count());
    for (int v = 0; v < box.vertex_count(); ++v)
        if (box.vertical_of(v) == w) slab.vertices.push_back(v);
    for (int e = 0; e < box.edge_count(); ++e) {
        if (box.edge_class[e] != EdgeClass::planar) continue;
        auto [u, v] = box.graph.endpoints(e);
        if (box.vertical_of(u) == w && box.vertical_of(v) == w) slab.edges.set(e);
    }
    return slab;
}

EdgeWeights edge_weights(const BoxGeometry& box, const Couplings& J) {
    if (J.jd < 0.0 || J.js < 0.0)
        throw std::invalid_argument("edge_weights: couplings must be nonnegative");
    EdgeWeights w(box.edge_count());
    for (int e = 0; e < box.edge_count(); ++e)
        w[e] = box.edge_class[e] == EdgeClass::planar ? J.jd : J.js;
    return w;
}

} // namespace aniso
