#pragma once

#include <vector>

#include "aniso/graph.hpp"

namespace aniso {

/// Planar/vertical coupling pair (J_d, J_s); the inverse temperature β = 1 is
/// absorbed into the couplings.
struct Couplings {
    double jd = 0.0;
    double js = 0.0;
};

enum class EdgeClass : unsigned char { planar, vertical };

/// A vertex of Z^(d+s) split into its planar coordinates u and vertical
/// coordinates t.
struct Vertex {
    std::vector<int> u;
    std::vector<int> t;
};

/// The finite box Λ_N ⊂ Z^(d+s): hypercube of side 2N+1 centred at the
/// origin.  Vertices and edges carry stable dense indices (lexicographic);
/// every edge is classified planar (differs in a u-coordinate) or vertical
/// (differs in a t-coordinate); the graph carries the canonical step order
/// +e_1, -e_1, ..., +e_d, -e_d, +f_1, -f_1, ..., +f_s, -f_s at every vertex.
struct BoxGeometry {
    int d = 0, s = 0, N = 0;
    Graph graph;
    std::vector<std::vector<int>> coord;  ///< per vertex: d planar then s vertical coords, each in [-N, N]
    std::vector<EdgeClass> edge_class;

    int dim() const { return d + s; }
    int side() const { return 2 * N + 1; }
    int vertex_count() const { return graph.vertex_count(); }
    int edge_count() const { return graph.edge_count(); }

    /// Dense index of a coordinate vector (length d+s, entries in [-N, N]).
    int vertex_index(const std::vector<int>& c) const;
    Vertex vertex(int index) const;
    int origin() const;

    /// Vertical coordinates (length s) of a vertex.
    std::vector<int> vertical_of(int index) const;
};

/// The slab Λ_N^w: the d-dimensional sub-box at vertical coordinate w,
/// together with its planar edge set E_N^w.
struct Slab {
    const BoxGeometry* box = nullptr;
    std::vector<int> w;
    std::vector<int> vertices;  ///< dense indices into the parent box
    EdgeSet edges;              ///< planar edges with both endpoints in the slab
};

BoxGeometry build_box(int d, int s, int N);

Slab slab_of(const BoxGeometry& box, const std::vector<int>& w);

/// Per-edge weights J_b induced by the couplings via the edge class.
EdgeWeights edge_weights(const BoxGeometry& box, const Couplings& J);

} // namespace aniso
