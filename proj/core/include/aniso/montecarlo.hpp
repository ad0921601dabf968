#pragma once

#include <cstdint>
#include <vector>

#include "aniso/lattice.hpp"
#include "aniso/susceptibility.hpp"

namespace aniso {

/// Empirical probe: Metropolis and Wolff samplers for the anisotropic model
/// on periodic tori.  The estimator ⟨M²⟩/|Λ| is a susceptibility proxy and
/// deliberately *not* the free-boundary sup-based χ of the exact modules;
/// the scan reports qualitative boundedness in L, never numeric equality
/// with the exact susceptibility.  Periodic boundaries are chosen for their
/// smaller finite-size effects.  L = 2 tori contain parallel edges (both
/// periodic directions give the same pair); they are kept, and the exact
/// torus oracle uses the same edge list, so cross-checks stay consistent.

struct TorusGeometry {
    int d = 0, s = 0, L = 0;
    Graph graph;
    std::vector<EdgeClass> edge_class;
};

TorusGeometry build_torus(int d, int s, int L);

EdgeWeights edge_weights(const TorusGeometry& torus, const Couplings& J);

struct McConfig {
    int d = 1, s = 1;
    int L = 4;              ///< torus linear size, L >= 2
    Couplings J{0.3, 0.1};
    long sweeps = 2000;     ///< total sweeps (Metropolis) or cluster updates (Wolff)
    long burnin = 200;      ///< discarded prefix; sweeps > burnin >= 0
    int chains = 16;        ///< independent chains (>= 2 for a standard error)
    uint64_t seed = 1;      ///< master seed; per-chain seeds derived by splitting
};

struct McEstimate {
    double proxy = 0.0;       ///< ⟨M²⟩/|Λ| averaged over chains
    double std_error = 0.0;   ///< standard error across independent chains
    int chains = 0;
    long samples_per_chain = 0;
    double aux = 0.0;         ///< acceptance rate (Metropolis) or mean cluster fraction (Wolff)
};

/// Single-spin-flip Metropolis at β = 1.  Identical config + seed gives a
/// bitwise identical estimate (fixed sweep order, fixed aggregation order).
McEstimate run_metropolis(const McConfig& cfg);

/// Wolff cluster updates with bond probabilities 1 - e^{-2 J_b}
/// (ferromagnetic couplings only).  Same determinism contract.
McEstimate run_wolff(const McConfig& cfg);

struct ScanSample {
    int L = 0;
    double proxy = 0.0;
    double std_error = 0.0;
};

struct ScanPoint {
    double jd = 0.0;
    double js_bound = 0.0;   ///< the curve's lower bound at this jd
    double js_run = 0.0;     ///< (1 - margin) · js_bound actually simulated
    std::vector<ScanSample> samples;  ///< one per requested L, ascending
    double last_rel_change = 0.0;     ///< proxy change between the two largest L
    bool saturating = false;          ///< heuristic: last_rel_change < 10%
};

struct ScanReport {
    std::vector<ScanPoint> points;
};

/// Diagnostic scan along a bound curve: for each point, simulate at
/// J_s = (1 - margin)·js_bound across increasing torus sizes and report
/// whether the proxy saturates.  Purely qualitative; no theorem verdict.
ScanReport scan_curve(const McConfig& base, const std::vector<BoundCurvePoint>& curve,
                      double margin, const std::vector<int>& sizes);

} // namespace aniso
