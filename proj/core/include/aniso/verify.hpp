#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aniso/instances.hpp"

namespace aniso {

/// The verification suites tie every module pair together: each record is
/// one concrete comparison (instance descriptor, both sides, tolerance,
/// verdict).  The CLI serializes suites to JSON; the acceptance harness
/// aggregates them per criterion.

struct CheckRecord {
    std::string instance;
    std::string check;
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckRecord> records;

    int failures() const;
    bool pass() const { return failures() == 0; }
};

/// Random-current identities vs the spin oracle on seeded random instances:
/// partition functions equal, sourced ratio equals the two-point function.
SuiteResult verify_identities(uint64_t seed, int trials,
                              const RandomGraphSpec& spec = {});

/// Backbone expansion Σ_ω ρ(ω) = ⟨σ_x σ_y⟩ on the fixed suite: single edge,
/// trees, the 4-cycle, the 3×3 grid, and the (1+1) N=1 box with J_d ≠ J_s.
SuiteResult verify_backbone_expansion();

/// Backbone-map soundness on random instances (cyclomatic ≤ 10): Ω lands in
/// C_xy, and grouping the sourced parity classes by Ω reproduces both the
/// per-path weights and the full sourced sum.
SuiteResult verify_backbone_grouping(uint64_t seed, int trials, int max_edges = 16);

/// The path inequalities — restriction, factorization, tanh bound, and the
/// planar/vertical splitting bound — on suite paths and random instances.
SuiteResult verify_properties(uint64_t seed, int trials, int max_edges = 16);

/// The susceptibility inequality chain on the (1+1) N=1 box across a
/// coupling grid, the J_s = 0 collapse, and a reduced-universe (2+1) run.
SuiteResult verify_chain();

/// GKS monotonicity: the two-point function never decreases under a single
/// coupling increase; positivity along the way.
SuiteResult verify_gks(uint64_t seed, int trials);

/// Everything above with default sizes.
std::vector<SuiteResult> verify_all(uint64_t seed);

} // namespace aniso
