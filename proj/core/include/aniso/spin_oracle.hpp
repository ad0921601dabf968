#pragma once

#include <vector>

#include "aniso/lattice.hpp"

namespace aniso {

/// Ground truth by direct summation over all 2^|V| spin configurations with a
/// Gray-code walk (one spin flip per configuration, O(deg) energy update).
/// Clarity and exactness over speed: every other module is checked against
/// these functions.  Hard vertex cap via caps().max_spin_vertices.

/// Partition function Z_U = 2^{-|U|} Σ_σ Π_{b ∈ edges} e^{J_b σ_x σ_y} over
/// the spins of `vertices`; `edges` must join vertices of that set.
double partition_spin(const Graph& g, const EdgeWeights& J, const EdgeSet& edges,
                      const std::vector<int>& vertices);

/// Whole-graph partition function.
double partition_spin(const Graph& g, const EdgeWeights& J);

/// Two-point function ⟨σ_x σ_y⟩ on the given edge set; equals 1 at x = y.
double two_point_spin(const Graph& g, const EdgeWeights& J, const EdgeSet& edges,
                      const std::vector<int>& vertices, int x, int y);
double two_point_spin(const Graph& g, const EdgeWeights& J, const EdgeSet& edges,
                      int x, int y);
double two_point_spin(const Graph& g, const EdgeWeights& J, int x, int y);

/// Per-vertex row sums Σ_y ⟨σ_x σ_y⟩ over the given edge set (one
/// configuration pass; the sup of these is the susceptibility).
std::vector<double> two_point_row_sums_spin(const Graph& g, const EdgeWeights& J,
                                            const EdgeSet& edges);

/// χ = sup_x Σ_y ⟨σ_x σ_y⟩ over the whole graph (exhaustive sup: free
/// boundaries break translation invariance).
double susceptibility_spin(const Graph& g, const EdgeWeights& J);

/// Finite-volume susceptibility χ_{Λ_N}(J_d, J_s) of a box.
double susceptibility_finite_spin(const BoxGeometry& box, const Couplings& J);

/// ⟨M²⟩ / |V| with M = Σ_x σ_x; the exact value of the sampler proxy.
double m2_per_site_spin(const Graph& g, const EdgeWeights& J);

} // namespace aniso
