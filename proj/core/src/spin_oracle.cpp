#include "aniso/spin_oracle.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "aniso/caps.hpp"
#include "aniso/numerics.hpp"

namespace aniso {
namespace {

// The configuration sum reindexed to local spin indices 0..n-1.
struct LocalSystem {
    int n = 0;
    // Per local vertex: (local neighbour, J) for each incident edge in play.
    std::vector<std::vector<std::pair<int, double>>> incident;
    double initial_energy = 0.0;  // all spins +1
};

LocalSystem project(const Graph& g, const EdgeWeights& J, const EdgeSet& edges,
                    const std::vector<int>& vertices) {
    if (int(J.size()) != g.edge_count())
        throw std::invalid_argument("spin oracle: weight vector size mismatch");
    if (int(vertices.size()) > caps().max_spin_vertices)
        throw_cap("spin oracle vertex count", (long long)vertices.size(),
                  caps().max_spin_vertices);
    LocalSystem sys;
    sys.n = int(vertices.size());
    sys.incident.resize(vertices.size());
    std::vector<int> local(g.vertex_count(), -1);
    for (int i = 0; i < sys.n; ++i) {
        if (local[vertices[i]] != -1)
            throw std::invalid_argument("spin oracle: duplicate vertex in set");
        local[vertices[i]] = i;
    }
    edges.for_each([&](int e) {
        auto [u, v] = g.endpoints(e);
        if (local[u] < 0 || local[v] < 0)
            throw std::invalid_argument("spin oracle: edge leaves the vertex set");
        sys.incident[local[u]].push_back({local[v], J[e]});
        sys.incident[local[v]].push_back({local[u], J[e]});
        sys.initial_energy += J[e];
    });
    return sys;
}

// Visit all 2^n spin configurations in Gray-code order.  f(spins, energy)
// with spins in {-1, +1}; the visiting order is fixed, so downstream Kahan
// sums are bit-stable.
template <class F>
void for_each_config(const LocalSystem& sys, F&& f) {
    std::vector<int> spin(sys.n, 1);
    double energy = sys.initial_energy;
    f(spin, energy);
    const uint64_t total = 1ull << sys.n;
    for (uint64_t k = 1; k < total; ++k) {
        int v = std::countr_zero(k);
        double local_field = 0.0;
        for (auto [w, j] : sys.incident[v]) local_field += j * spin[w];
        energy -= 2.0 * spin[v] * local_field;
        spin[v] = -spin[v];
        f(spin, energy);
    }
}

std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> v(g.vertex_count());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

} // namespace

double partition_spin(const Graph& g, const EdgeWeights& J, const EdgeSet& edges,
                      const std::vector<int>& vertices) {
    LocalSystem sys = project(g, J, edges, vertices);
    KahanSum z;
    for_each_config(sys, [&](const std::vector<int>&, double e) { z.add(std::exp(e)); });
    return std::ldexp(z.value(), -sys.n);
}

double partition_spin(const Graph& g, const EdgeWeights& J) {
    return partition_spin(g, J, g.all_edges(), all_vertices(g));
}

double two_point_spin(const Graph& g, const EdgeWeights& J, const EdgeSet& edges,
                      const std::vector<int>& vertices, int x, int y) {
    if (x == y) return 1.0;
    LocalSystem sys = project(g, J, edges, vertices);
    int lx = -1, ly = -1;
    for (int i = 0; i < int(vertices.size()); ++i) {
        if (vertices[i] == x) lx = i;
        if (vertices[i] == y) ly = i;
    }
    if (lx < 0 || ly < 0)
        throw std::invalid_argument("two_point_spin: endpoint outside vertex set");
    KahanSum num, den;
    for_each_config(sys, [&](const std::vector<int>& spin, double e) {
        double w = std::exp(e);
        den.add(w);
        num.add(spin[lx] * spin[ly] * w);
    });
    return num.value() / den.value();
}

double two_point_spin(const Graph& g, const EdgeWeights& J, const EdgeSet& edges,
                      int x, int y) {
    return two_point_spin(g, J, edges, all_vertices(g), x, y);
}

double two_point_spin(const Graph& g, const EdgeWeights& J, int x, int y) {
    return two_point_spin(g, J, g.all_edges(), x, y);
}

std::vector<double> two_point_row_sums_spin(const Graph& g, const EdgeWeights& J,
                                            const EdgeSet& edges) {
    LocalSystem sys = project(g, J, edges, all_vertices(g));
    std::vector<KahanSum> row(g.vertex_count());
    KahanSum z;
    for_each_config(sys, [&](const std::vector<int>& spin, double e) {
        double w = std::exp(e);
        z.add(w);
        int m = 0;
        for (int s : spin) m += s;
        for (int v = 0; v < int(spin.size()); ++v) row[v].add(w * spin[v] * m);
    });
    std::vector<double> out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) out[v] = row[v].value() / z.value();
    return out;
}

double susceptibility_spin(const Graph& g, const EdgeWeights& J) {
    std::vector<double> rows = two_point_row_sums_spin(g, J, g.all_edges());
    double best = 0.0;
    for (double r : rows) best = std::max(best, r);
    return best;
}

double susceptibility_finite_spin(const BoxGeometry& box, const Couplings& J) {
    return susceptibility_spin(box.graph, edge_weights(box, J));
}

double m2_per_site_spin(const Graph& g, const EdgeWeights& J) {
    LocalSystem sys = project(g, J, g.all_edges(), all_vertices(g));
    KahanSum z, m2;
    for_each_config(sys, [&](const std::vector<int>& spin, double e) {
        double w = std::exp(e);
        int m = 0;
        for (int s : spin) m += s;
        z.add(w);
        m2.add(w * double(m) * double(m));
    });
    return m2.value() / z.value() / double(g.vertex_count());
}

} // namespace aniso
