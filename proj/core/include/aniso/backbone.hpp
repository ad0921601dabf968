#pragma once

#include <vector>

#include "aniso/caps.hpp"
#include "aniso/currents.hpp"
#include "aniso/lattice.hpp"

namespace aniso {

/// Consistent-path machinery: enumeration of C_xy, the backbone weight
/// ρ_E(ω), the restriction/concatenation properties, the tanh bound, and the
/// planar/vertical splitting used by the susceptibility chain.
///
/// Convention (pinned by the backbone-partition checks): C_xy contains the
/// consistent paths in which y occurs exactly once, as the final vertex
/// ("first passage").  With that reading the classes {η : Ω(η) = ω} tile the
/// sourced currents and Σ_ω ρ(ω) reproduces the two-point function exactly.

/// Depth-first enumeration of every first-passage consistent path starting
/// at x, in step order.  `f` is invoked once per path (length >= 1); the
/// path's target is `path.target()`.  Paths returning to x are never
/// reported.  The search-node guard caps().max_paths bounds the traversal;
/// `max_len` (-1 = unlimited) prunes by step count.
template <class F>
void for_each_consistent_path(const Graph& g, const EdgeSet& universe, int x,
                              F&& f, int max_len = -1) {
    struct Dfs {
        const Graph& g;
        const EdgeSet& universe;
        F& f;
        int max_len;
        ConsistentPath cur;
        std::vector<int> visits;
        long long nodes = 0;

        void run(int v) {
            if (++nodes > caps().max_paths)
                throw_cap("consistent-path search nodes", nodes, caps().max_paths);
            if (visits[v] == 1 && cur.length() > 0) f(const_cast<const ConsistentPath&>(cur));
            if (max_len >= 0 && cur.length() >= max_len) return;
            for (const Graph::Arc& a : g.adjacency(v)) {
                if (!universe.test(a.edge) || cur.cancelled.test(a.edge)) continue;
                EdgeSet saved = cur.cancelled;
                cur.cancelled |= g.cancelled_set_via(v, a.edge, universe);
                cur.vertices.push_back(a.to);
                cur.edges.push_back(a.edge);
                ++visits[a.to];
                run(a.to);
                --visits[a.to];
                cur.vertices.pop_back();
                cur.edges.pop_back();
                cur.cancelled = std::move(saved);
            }
        }
    };
    Dfs dfs{g, universe, f, max_len, ConsistentPath{{x}, {}, EdgeSet(g.edge_count())},
            std::vector<int>(g.vertex_count(), 0)};
    dfs.visits[x] = 1;
    dfs.run(x);
}

/// All first-passage consistent paths from x to y, in deterministic (step)
/// order.  max_len = -1 enumerates exhaustively (paths are edge-self-avoiding,
/// so length is bounded by |universe| anyway).
std::vector<ConsistentPath> enumerate_consistent_paths(const Graph& g,
                                                       const EdgeSet& universe,
                                                       int x, int y,
                                                       int max_len = -1);

/// ρ_U(ω) = Π_{b ∈ ω} tanh(J_b) × constrained_sourceless_ratio(U, ω*), with
/// ω* recomputed within U.  Throws if the path is not consistent in U.
double rho(const Graph& g, const EdgeWeights& J, const EdgeSet& universe,
           const ConsistentPath& path);

struct PathContribution {
    ConsistentPath path;
    double value = 0.0;
};

struct ExpansionReport {
    double expansion_sum = 0.0;  ///< Σ_ω ρ(ω)
    double oracle = 0.0;         ///< two_point_spin
    double relative_error = 0.0;
    bool pass = false;
    std::vector<PathContribution> contributions;
};

/// Check Σ_{ω ∈ C_xy} ρ_E(ω) = ⟨σ_x σ_y⟩ against the spin oracle.
ExpansionReport backbone_expansion_check(const Graph& g, const EdgeWeights& J,
                                         int x, int y, double tolerance = 1e-10);

/// Property a (restriction): for a path inside U ⊆ E, ρ_E(ω) ≤ ρ_U(ω).
bool check_property_a(const Graph& g, const EdgeWeights& J, const EdgeSet& universeU,
                      const EdgeSet& universeE, const std::vector<int>& path_vertices,
                      double slack = 1e-12);

/// Property b (factorization): ρ_E(ω1 ∘ ω2) = ρ_E(ω1) · ρ_{E ∖ ω1*}(ω2).
/// `front` and `back` are vertex sequences with front.back() == back.front().
bool check_property_b(const Graph& g, const EdgeWeights& J, const EdgeSet& universe,
                      const std::vector<int>& front, const std::vector<int>& back,
                      double rel_tolerance = 1e-10);

/// Tanh bound: ρ_U(ω) ≤ Π_{b ∈ ω} tanh(J_b).
bool check_tanh_bound(const Graph& g, const EdgeWeights& J, const EdgeSet& universe,
                      const ConsistentPath& path, double slack = 1e-12);

/// The planar/vertical decomposition ω = ω_1 ∘ s_1 ∘ ... ∘ s_n ∘ ω_{n+1}:
/// maximal planar pieces (zero length allowed) separated by unit vertical
/// steps.  t_anchor[k] is the vertical coordinate vector of piece k's slab,
/// with t_anchor[k] = t_anchor[k-1] + s_k.
struct PathSplit {
    std::vector<ConsistentPath> pieces;       ///< n+1 planar pieces
    std::vector<int> vertical_edges;          ///< the n vertical step edge ids
    std::vector<std::vector<int>> t_anchor;   ///< n+1 slab coordinates
    int n() const { return int(vertical_edges.size()); }
};

PathSplit split_path(const BoxGeometry& box, const EdgeSet& universe,
                     const ConsistentPath& path);

/// Vertex sequence of the re-concatenated split (identity on the input path).
std::vector<int> concat_split(const PathSplit& split);

/// Right-hand side of the splitting bound:
///   Π_k tanh(J_{s_k}) × Π_k ρ_{(slab(t_{k-1}) ∩ U) ∖ F_k*}(ω_k),
/// where F_k* is the cancelled set of the prefix before piece k.  Writes the
/// number of vertical steps to *n_out if given.
double splitting_bound_value(const BoxGeometry& box, const EdgeWeights& J,
                             const EdgeSet& universe, const ConsistentPath& path,
                             int* n_out = nullptr);

/// ρ_U(ω) ≤ splitting_bound_value(ω).
bool check_splitting_bound(const BoxGeometry& box, const EdgeWeights& J,
                           const EdgeSet& universe, const ConsistentPath& path,
                           double slack = 1e-12);

} // namespace aniso
