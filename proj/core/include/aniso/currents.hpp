#pragma once

#include <optional>
#include <vector>

#include "aniso/caps.hpp"
#include "aniso/path.hpp"

namespace aniso {

/// Exact random-current computations by parity-class reduction.  Summing the
/// current weights W(η) = Π J_b^{η_b} / η_b! over all integer currents with a
/// fixed parity pattern factorizes edge by edge into sinh(J_b) on odd edges
/// and cosh(J_b) on even edges, so enumeration over even/sourced subgraphs is
/// exact — no truncation anywhere.  Subgraphs are enumerated as the xor-span
/// of a cycle-space basis: 2^cyclomatic terms instead of 2^|E|.

/// A current configuration reduced to its parity class: the set of edges
/// carrying odd current, within a fixed edge universe.
struct ParityConfig {
    EdgeSet odd;
    EdgeSet universe;
};

struct CycleBasis {
    std::vector<EdgeSet> cycles;  ///< fundamental cycles of the spanning forest
    EdgeSet forest;               ///< the forest edges
    int dim() const { return int(cycles.size()); }
};

/// Deterministic spanning-forest cycle basis of the universe (BFS in vertex
/// and step order).  dim = |E| - |V| + #components.
CycleBasis cycle_basis(const Graph& g, const EdgeSet& universe);

/// Odd-edge set of one x->y reference "path" (a BFS path), or nullopt if x
/// and y are not connected inside the universe.  Sourced subgraphs are
/// exactly this set xored with the cycle space.
std::optional<EdgeSet> reference_odd_set(const Graph& g, const EdgeSet& universe,
                                         int x, int y);

/// Vertices with odd degree in `odd` (the sources ∂η of the parity class).
std::vector<int> sources_of(const Graph& g, const EdgeSet& odd);

namespace detail {

template <class F>
void span_subgraphs(const CycleBasis& basis, EdgeSet start, F&& f) {
    if (basis.dim() > caps().max_cycle_dim)
        throw_cap("cycle-space dimension", basis.dim(), caps().max_cycle_dim);
    // Gray-code walk: one basis-cycle xor per visited subgraph.
    f(const_cast<const EdgeSet&>(start));
    const uint64_t total = 1ull << basis.dim();
    for (uint64_t k = 1; k < total; ++k) {
        start ^= basis.cycles[std::countr_zero(k)];
        f(const_cast<const EdgeSet&>(start));
    }
}

} // namespace detail

/// Visit every even subgraph of the universe exactly once.
template <class F>
void for_each_even_subgraph(const Graph& g, const EdgeSet& universe, F&& f) {
    detail::span_subgraphs(cycle_basis(g, universe), EdgeSet(g.edge_count()),
                           std::forward<F>(f));
}

/// Visit every subgraph of the universe with odd degree exactly at {x, y};
/// does nothing if x and y are not connected inside the universe.
template <class F>
void for_each_sourced_subgraph(const Graph& g, const EdgeSet& universe, int x, int y,
                               F&& f) {
    auto ref = reference_odd_set(g, universe, x, y);
    if (!ref) return;
    detail::span_subgraphs(cycle_basis(g, universe), *ref, std::forward<F>(f));
}

/// T(U) = Σ_{even Γ ⊆ U} Π_{b ∈ Γ} tanh(J_b).  The common currency of all
/// ratios here: Z(U) = e^{Σ log cosh} · T(U), so cosh products cancel in
/// every ratio the checks need.
double even_tanh_sum(const Graph& g, const EdgeWeights& J, const EdgeSet& universe);

/// S(U; x, y) = Σ_{∂Γ = {x,y}} Π_{b ∈ Γ} tanh(J_b); 0 if x, y disconnected.
double sourced_tanh_sum(const Graph& g, const EdgeWeights& J, const EdgeSet& universe,
                        int x, int y);

/// Σ_{b ∈ U} log cosh(J_b).
double log_cosh_sum(const EdgeWeights& J, const EdgeSet& universe);

/// Z via currents: e^{Σ log cosh} · T(U).  Matches partition_spin.
double partition_currents(const Graph& g, const EdgeWeights& J, const EdgeSet& universe);
double partition_currents(const Graph& g, const EdgeWeights& J);

/// Σ_{η: ∂η = {x,y}} W(η) via currents: e^{Σ log cosh} · S(U; x, y).
double sourced_sum(const Graph& g, const EdgeWeights& J, const EdgeSet& universe,
                   int x, int y);
double sourced_sum(const Graph& g, const EdgeWeights& J, int x, int y);

/// ⟨σ_x σ_y⟩ = S / T (cosh factors cancel analytically); 1 at x = y.
double two_point_currents(const Graph& g, const EdgeWeights& J, const EdgeSet& universe,
                          int x, int y);
double two_point_currents(const Graph& g, const EdgeWeights& J, int x, int y);

/// Probability that a sourceless current is even on `evenOn`:
///   [Π_{b ∈ evenOn} cosh(J_b) · Σ_{even Γ ⊆ U∖evenOn} Π sinh Π cosh] / Z(U),
/// which reduces to T(U ∖ evenOn) / T(U).  Lies in (0, 1].
double constrained_sourceless_ratio(const Graph& g, const EdgeWeights& J,
                                    const EdgeSet& universe, const EdgeSet& evenOn);

/// Per-vertex row sums Σ_y ⟨σ_x σ_y⟩, with x and y ranging over `vertices`,
/// two-point values via currents (T computed once, one sourced sum per pair).
std::vector<double> two_point_row_sums_currents(const Graph& g, const EdgeWeights& J,
                                                const EdgeSet& universe,
                                                const std::vector<int>& vertices);

/// sup_x of the row sums above.
double susceptibility_currents(const Graph& g, const EdgeWeights& J,
                               const EdgeSet& universe, const std::vector<int>& vertices);

/// The backbone Ω(η) of a sourced parity class: walk from x through the
/// odd-edge subgraph, at each vertex taking the minimal step (in the step
/// order) whose edge is odd and not yet traversed, removing traversed edges,
/// stopping on first arrival at y.  The result is validated to be a
/// consistent path within the class's universe.
ConsistentPath backbone_map(const Graph& g, const ParityConfig& config, int x, int y);

} // namespace aniso
