#include "aniso/susceptibility.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "aniso/numerics.hpp"
#include "aniso/spin_oracle.hpp"

namespace aniso {

const char* to_string(ChiProvenance p) {
    switch (p) {
        case ChiProvenance::exact_closed_form: return "closed-form";
        case ChiProvenance::exact_enumeration: return "enumeration";
        case ChiProvenance::transfer_matrix: return "transfer-matrix";
        case ChiProvenance::extrapolated: return "extrapolated";
    }
    return "?";
}

const char* certification_label(ChiProvenance p) {
    switch (p) {
        case ChiProvenance::exact_closed_form: return "certified";
        case ChiProvenance::exact_enumeration: return "estimated";
        case ChiProvenance::transfer_matrix: return "estimated";
        case ChiProvenance::extrapolated: return "extrapolated";
    }
    return "?";
}

ChiEstimate chi_1d_exact(double J) {
    if (J < 0.0) throw std::invalid_argument("chi_1d_exact: J must be nonnegative");
    double t = std::tanh(J);
    return {(1.0 + t) / (1.0 - t), ChiProvenance::exact_closed_form, "Z^1"};
}

ChiEstimate chi_finite_exact(const Graph& g, const EdgeWeights& J,
                             const EdgeSet& universe, const std::vector<int>& vertices,
                             std::string volume_label) {
    return {susceptibility_currents(g, J, universe, vertices),
            ChiProvenance::exact_enumeration, std::move(volume_label)};
}

ChiEstimate chi_finite_exact(const BoxGeometry& box, const Couplings& J) {
    std::vector<int> all(box.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    std::string label = "box d=" + std::to_string(box.d) + " s=" + std::to_string(box.s) +
                        " N=" + std::to_string(box.N);
    return chi_finite_exact(box.graph, edge_weights(box, J), box.graph.all_edges(), all,
                            std::move(label));
}

ChiEstimate chi_finite_exact(const Slab& slab, double J_d) {
    const BoxGeometry& box = *slab.box;
    EdgeWeights J(box.edge_count(), 0.0);
    slab.edges.for_each([&](int e) { J[e] = J_d; });
    return chi_finite_exact(box.graph, J, slab.edges, slab.vertices,
                            "slab N=" + std::to_string(box.N) + " d=" + std::to_string(box.d));
}

// ---------------------------------------------------------------------------
// Strip transfer matrix.
//
// Column states are spin configurations s ∈ {0,1}^W (bit r set ⟺ σ_r = -1).
// With A(s) the intra-column Boltzmann factor and B(s,s') the inter-column
// one, the forward/backward vectors
//   f_{c+1} = A ⊙ (B f_c),        b_c = B (A ⊙ b_{c+1}),
// and their magnetization-accumulating companions
//   F_{c+1} = A ⊙ (B F_c) + m ⊙ f_{c+1},   G_c = B (A ⊙ (G_{c+1} + m ⊙ b_{c+1})),
// give, for a site x = (r, c),
//   Σ_y ⟨σ_x σ_y⟩ = Σ_s σ_r(s) [F_c(s) b_c(s) + f_c(s) G_c(s)] / Σ_s f_c(s) b_c(s).
// F accumulates the magnetization of columns ≤ c and G of columns > c, so
// every site y is counted exactly once.  f and F share their normalization
// factor, as do b and G, so the per-column rescaling (needed to keep long
// strips in range) cancels in the ratio.
// ---------------------------------------------------------------------------
namespace {

// (Bv)(s') = Σ_s Π_r e^{J σ_r(s) σ_r(s')} v(s), applied one bond at a time.
void apply_inter_column(std::vector<double>& v, int width, double J) {
    const double ep = std::exp(J), em = std::exp(-J);
    for (int r = 0; r < width; ++r) {
        const uint64_t bit = 1ull << r;
        for (uint64_t s = 0; s < v.size(); ++s) {
            if (s & bit) continue;
            double v0 = v[s], v1 = v[s | bit];
            v[s] = ep * v0 + em * v1;
            v[s | bit] = em * v0 + ep * v1;
        }
    }
}

void normalize_pair(std::vector<double>& a, std::vector<double>& b) {
    double peak = 0.0;
    for (double x : a) peak = std::max(peak, std::fabs(x));
    if (peak == 0.0) return;
    for (double& x : a) x /= peak;
    for (double& x : b) x /= peak;
}

} // namespace

ChiEstimate chi_2d_strip(int width, int length, double J) {
    constexpr int kMaxWidth = 12;
    if (width < 1) throw std::invalid_argument("chi_2d_strip: width must be positive");
    if (width > kMaxWidth) throw_cap("strip width", width, kMaxWidth);
    if (length < width)
        throw std::invalid_argument("chi_2d_strip: length must be at least the width");
    const size_t states = 1ull << width;
    const uint64_t wmask = states - 1;

    std::vector<double> a_factor(states), mag(states);
    const uint64_t intra_mask = width > 1 ? ((1ull << (width - 1)) - 1) : 0;
    for (uint64_t s = 0; s < states; ++s) {
        int disagreements = std::popcount((s ^ (s >> 1)) & intra_mask);
        a_factor[s] = std::exp(J * ((width - 1) - 2 * disagreements));
        mag[s] = double(width - 2 * std::popcount(s & wmask));
    }

    // forward and backward sweeps, stored per column (1-based c in [1, L])
    std::vector<std::vector<double>> f(length + 1), F(length + 1), b(length + 1),
        G(length + 1);
    f[1] = a_factor;
    F[1].resize(states);
    for (uint64_t s = 0; s < states; ++s) F[1][s] = a_factor[s] * mag[s];
    normalize_pair(f[1], F[1]);
    for (int c = 2; c <= length; ++c) {
        f[c] = f[c - 1];
        F[c] = F[c - 1];
        apply_inter_column(f[c], width, J);
        apply_inter_column(F[c], width, J);
        for (uint64_t s = 0; s < states; ++s) {
            f[c][s] *= a_factor[s];
            F[c][s] = a_factor[s] * F[c][s] + mag[s] * f[c][s];
        }
        normalize_pair(f[c], F[c]);
    }
    b[length].assign(states, 1.0);
    G[length].assign(states, 0.0);
    for (int c = length - 1; c >= 1; --c) {
        b[c].resize(states);
        G[c].resize(states);
        for (uint64_t s = 0; s < states; ++s) {
            b[c][s] = a_factor[s] * b[c + 1][s];
            G[c][s] = a_factor[s] * (G[c + 1][s] + mag[s] * b[c + 1][s]);
        }
        apply_inter_column(b[c], width, J);
        apply_inter_column(G[c], width, J);
        normalize_pair(b[c], G[c]);
    }

    double best = 0.0;
    for (int c = 1; c <= length; ++c) {
        KahanSum z;
        for (uint64_t s = 0; s < states; ++s) z.add(f[c][s] * b[c][s]);
        for (int r = 0; r < width; ++r) {
            KahanSum num;
            for (uint64_t s = 0; s < states; ++s) {
                double sigma = (s >> r) & 1 ? -1.0 : 1.0;
                num.add(sigma * (F[c][s] * b[c][s] + f[c][s] * G[c][s]));
            }
            best = std::max(best, num.value() / z.value());
        }
    }
    return {best, ChiProvenance::transfer_matrix,
            "strip " + std::to_string(width) + "x" + std::to_string(length)};
}

ChiEstimate chi_2d_extrapolated(int max_width, int length, double J) {
    if (max_width < 3)
        throw std::invalid_argument("chi_2d_extrapolated: need max_width >= 3");
    double c0 = chi_2d_strip(max_width - 2, length, J).value;
    double c1 = chi_2d_strip(max_width - 1, length, J).value;
    double c2 = chi_2d_strip(max_width, length, J).value;
    double d1 = c1 - c0, d2 = c2 - c1;
    double value = c2;
    if (d1 > 0.0 && d2 > 0.0 && d2 < d1) {
        double r = d2 / d1;  // geometric decay of increments
        value = c2 + d2 * r / (1.0 - r);
    }
    return {value, ChiProvenance::extrapolated,
            "strip widths " + std::to_string(max_width - 2) + ".." +
                std::to_string(max_width) + " x" + std::to_string(length)};
}

double geometric_bound(double chi_d, int s, double J_s) {
    if (chi_d < 1.0 || s < 1 || J_s < 0.0)
        throw std::invalid_argument("geometric_bound: need chi >= 1, s >= 1, J_s >= 0");
    double q = 2.0 * s * std::tanh(J_s) * chi_d;
    if (q >= 1.0) return kInf;
    return chi_d / (1.0 - q);
}

double truncated_geometric_series(double chi_d, int s, double J_s, int n_max) {
    double q = 2.0 * s * std::tanh(J_s) * chi_d;
    KahanSum sum;
    double term = chi_d;
    for (int n = 0; n <= n_max; ++n) {
        sum.add(term);
        term *= q;
    }
    return sum.value();
}

double geometric_tail_bound(double chi_d, int s, double J_s, int n_max) {
    double q = 2.0 * s * std::tanh(J_s) * chi_d;
    if (q >= 1.0) return kInf;
    return std::pow(q, n_max + 1) * chi_d / (1.0 - q);
}

double js_bound_from_chi(double chi, int s) {
    if (chi < 1.0 || s < 1)
        throw std::invalid_argument("js_bound_from_chi: need chi >= 1, s >= 1");
    double x = 1.0 / (2.0 * s * chi);
    if (x >= 1.0) return kInf;  // every J_s satisfies tanh(J_s) < x
    return artanh(x);
}

std::vector<BoundCurvePoint> bound_curve(int d, int s, const std::vector<double>& jd_grid,
                                         CurveEstimator estimator,
                                         const CurveParams& params) {
    if (s < 1) throw std::invalid_argument("bound_curve: need s >= 1");
    if (estimator == CurveEstimator::closed_form_1d && d != 1)
        throw std::invalid_argument("bound_curve: closed-form estimator requires d = 1");
    if ((estimator == CurveEstimator::strip_transfer ||
         estimator == CurveEstimator::strip_extrapolated) &&
        d != 2)
        throw std::invalid_argument("bound_curve: strip estimators require d = 2");
    if (d != 1 && d != 2)
        throw std::invalid_argument("bound_curve: only d = 1 and d = 2 supported");
    for (double jd : jd_grid)
        if (jd <= 0.0) throw std::invalid_argument("bound_curve: grid values must be positive");

    std::vector<BoundCurvePoint> out;
    out.reserve(jd_grid.size());
    for (double jd : jd_grid) {
        ChiEstimate chi;
        switch (estimator) {
            case CurveEstimator::closed_form_1d:
                chi = chi_1d_exact(jd);
                break;
            case CurveEstimator::finite_enumeration: {
                BoxGeometry box = build_box(d, 0, params.N);
                chi = chi_finite_exact(box, Couplings{jd, 0.0});
                break;
            }
            case CurveEstimator::strip_transfer:
                chi = chi_2d_strip(params.width, params.length, jd);
                break;
            case CurveEstimator::strip_extrapolated:
                chi = chi_2d_extrapolated(params.width, params.length, jd);
                break;
        }
        out.push_back({jd, chi, js_bound_from_chi(chi.value, s)});
    }
    return out;
}

ChainReport theorem_chain_check(const BoxGeometry& box, const Couplings& J, int n_max,
                                const EdgeSet* universe_opt, double rel_slack) {
    if (box.s < 1)
        throw std::invalid_argument("theorem_chain_check: need s >= 1");
    ChainReport report;
    report.n_max = n_max;
    const EdgeSet universe = universe_opt ? *universe_opt : box.graph.all_edges();
    const EdgeWeights weights = edge_weights(box, J);

    // (i) exact rows: spin oracle within the vertex cap, currents otherwise
    // (the identity between the two is itself under test elsewhere).
    std::vector<double> rows;
    if (box.vertex_count() <= caps().max_spin_vertices) {
        rows = two_point_row_sums_spin(box.graph, weights, universe);
    } else {
        std::vector<int> all(box.vertex_count());
        std::iota(all.begin(), all.end(), 0);
        rows = two_point_row_sums_currents(box.graph, weights, universe, all);
    }

    // (ii) per-x splitting bound over all first-passage consistent paths;
    // the empty path contributes the y = x term.
    double worst_margin = kInf;
    bool all_below = true;
    for (int x = 0; x < box.vertex_count(); ++x) {
        KahanSum bound_x;
        bound_x.add(1.0);
        std::vector<double> per_n{1.0};
        for_each_consistent_path(box.graph, universe, x, [&](const ConsistentPath& p) {
            int n = 0;
            double value = splitting_bound_value(box, weights, universe, p, &n);
            bound_x.add(value);
            if (int(per_n.size()) <= n) per_n.resize(n + 1, 0.0);
            per_n[n] += value;
            ++report.path_count;
        });
        double margin = bound_x.value() - rows[x];
        worst_margin = std::min(worst_margin, margin);
        if (rows[x] > bound_x.value() * (1.0 + rel_slack) + 1e-12) all_below = false;
        if (bound_x.value() > report.split_bound) {
            report.split_bound = bound_x.value();
            report.per_n = std::move(per_n);
        }
        report.chi_exact = std::max(report.chi_exact, rows[x]);
    }
    report.min_margin_i_ii = worst_margin;
    report.pass_i_le_ii = all_below;

    // (iii) geometric bound from the full central slab (restrictions do not
    // lower it: slab correlations only grow with the edge set).
    Slab central = slab_of(box, std::vector<int>(box.s, 0));
    report.chi_slab = chi_finite_exact(central, J.jd).value;
    report.geometric = geometric_bound(report.chi_slab, box.s, J.js);
    report.pass_ii_le_iii =
        report.geometric == kInf ||
        report.split_bound <= report.geometric * (1.0 + rel_slack) + 1e-12;

    report.js_bound_slab = js_bound_from_chi(report.chi_slab, box.s);
    double q = 2.0 * box.s * std::tanh(J.js) * report.chi_slab;
    report.subcritical = q < 1.0;
    report.truncated = truncated_geometric_series(report.chi_slab, box.s, J.js, n_max);
    report.tail_bound = geometric_tail_bound(report.chi_slab, box.s, J.js, n_max);
    report.pass = report.pass_i_le_ii && report.pass_ii_le_iii;
    return report;
}

} // namespace aniso
