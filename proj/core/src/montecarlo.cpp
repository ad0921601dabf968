#include "aniso/montecarlo.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "aniso/numerics.hpp"

namespace aniso {
namespace {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double unit_double(std::mt19937_64& rng) {
    // 53-bit mantissa in [0, 1); explicit so results do not depend on
    // library distribution internals
    return double(rng() >> 11) * 0x1.0p-53;
}

void validate(const McConfig& cfg) {
    if (cfg.d < 0 || cfg.s < 0 || cfg.d + cfg.s < 1)
        throw std::invalid_argument("montecarlo: need d + s >= 1");
    if (cfg.L < 2) throw std::invalid_argument("montecarlo: need L >= 2");
    if (!(cfg.sweeps > cfg.burnin && cfg.burnin >= 0))
        throw std::invalid_argument("montecarlo: need sweeps > burnin >= 0");
    if (cfg.chains < 2)
        throw std::invalid_argument("montecarlo: need at least 2 chains");
    if (cfg.J.jd < 0.0 || cfg.J.js < 0.0)
        throw std::invalid_argument("montecarlo: ferromagnetic couplings only");
}

struct ChainResult {
    double mean_m2 = 0.0;
    double aux = 0.0;
};

// Aggregate per-chain means in chain order (deterministic given the seeds).
McEstimate aggregate(const std::vector<ChainResult>& results, long samples) {
    McEstimate est;
    est.chains = int(results.size());
    est.samples_per_chain = samples;
    KahanSum mean, aux;
    for (const ChainResult& r : results) {
        mean.add(r.mean_m2);
        aux.add(r.aux);
    }
    est.proxy = mean.value() / est.chains;
    est.aux = aux.value() / est.chains;
    KahanSum var;
    for (const ChainResult& r : results) {
        double d = r.mean_m2 - est.proxy;
        var.add(d * d);
    }
    est.std_error = std::sqrt(var.value() / (est.chains - 1) / est.chains);
    return est;
}

std::vector<int8_t> random_spins(int n, std::mt19937_64& rng) {
    std::vector<int8_t> spin(n);
    for (int v = 0; v < n; ++v) spin[v] = (rng() & 1) ? int8_t(1) : int8_t(-1);
    return spin;
}

} // namespace

TorusGeometry build_torus(int d, int s, int L) {
    if (d < 0 || s < 0 || d + s < 1)
        throw std::invalid_argument("build_torus: need d + s >= 1");
    if (L < 2) throw std::invalid_argument("build_torus: need L >= 2");
    const int dim = d + s;
    long long nv = 1;
    for (int i = 0; i < dim; ++i) {
        nv *= L;
        if (nv > 4'000'000)
            throw std::invalid_argument("build_torus: torus too large to materialize");
    }
    TorusGeometry torus{d, s, L, Graph(int(nv)), {}};
    std::vector<int> coord(dim);
    for (int v = 0; v < int(nv); ++v) {
        int rest = v;
        for (int i = dim - 1; i >= 0; --i) {
            coord[i] = rest % L;
            rest /= L;
        }
        for (int a = 0; a < dim; ++a) {
            int save = coord[a];
            coord[a] = (save + 1) % L;
            int w = 0;
            for (int i = 0; i < dim; ++i) w = w * L + coord[i];
            coord[a] = save;
            torus.graph.add_edge(v, w);
            torus.edge_class.push_back(a < d ? EdgeClass::planar : EdgeClass::vertical);
        }
    }
    return torus;
}

EdgeWeights edge_weights(const TorusGeometry& torus, const Couplings& J) {
    EdgeWeights w(torus.graph.edge_count());
    for (int e = 0; e < torus.graph.edge_count(); ++e)
        w[e] = torus.edge_class[e] == EdgeClass::planar ? J.jd : J.js;
    return w;
}

McEstimate run_metropolis(const McConfig& cfg) {
    validate(cfg);
    TorusGeometry torus = build_torus(cfg.d, cfg.s, cfg.L);
    EdgeWeights J = edge_weights(torus, cfg.J);
    const Graph& g = torus.graph;
    const int n = g.vertex_count();
    const long samples = cfg.sweeps - cfg.burnin;

    uint64_t master = cfg.seed;
    std::vector<ChainResult> results(cfg.chains);
    for (int chain = 0; chain < cfg.chains; ++chain) {
        std::mt19937_64 rng(splitmix64(master));
        std::vector<int8_t> spin = random_spins(n, rng);
        KahanSum m2_sum;
        long accepted = 0;
        for (long sweep = 0; sweep < cfg.sweeps; ++sweep) {
            for (int v = 0; v < n; ++v) {
                double field = 0.0;
                for (const Graph::Arc& a : g.adjacency(v)) field += J[a.edge] * spin[a.to];
                double delta = 2.0 * spin[v] * field;
                if (delta <= 0.0 || unit_double(rng) < std::exp(-delta)) {
                    spin[v] = -spin[v];
                    ++accepted;
                }
            }
            if (sweep >= cfg.burnin) {
                long m = 0;
                for (int8_t sv : spin) m += sv;
                m2_sum.add(double(m) * double(m));
            }
        }
        results[chain].mean_m2 = m2_sum.value() / double(samples) / double(n);
        results[chain].aux = double(accepted) / (double(cfg.sweeps) * n);
    }
    return aggregate(results, samples);
}

McEstimate run_wolff(const McConfig& cfg) {
    validate(cfg);
    TorusGeometry torus = build_torus(cfg.d, cfg.s, cfg.L);
    EdgeWeights J = edge_weights(torus, cfg.J);
    const Graph& g = torus.graph;
    const int n = g.vertex_count();
    const long samples = cfg.sweeps - cfg.burnin;

    std::vector<double> p_add(J.size());
    for (size_t e = 0; e < J.size(); ++e) p_add[e] = 1.0 - std::exp(-2.0 * J[e]);

    uint64_t master = cfg.seed;
    std::vector<ChainResult> results(cfg.chains);
    for (int chain = 0; chain < cfg.chains; ++chain) {
        std::mt19937_64 rng(splitmix64(master));
        std::vector<int8_t> spin = random_spins(n, rng);
        std::vector<char> in_cluster(n);
        std::vector<int> stack, cluster;
        KahanSum m2_sum, cluster_frac;
        for (long update = 0; update < cfg.sweeps; ++update) {
            int seed_site = int(rng() % uint64_t(n));
            std::fill(in_cluster.begin(), in_cluster.end(), 0);
            stack.assign(1, seed_site);
            cluster.assign(1, seed_site);
            in_cluster[seed_site] = 1;
            const int8_t sign = spin[seed_site];
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (const Graph::Arc& a : g.adjacency(v)) {
                    if (in_cluster[a.to] || spin[a.to] != sign) continue;
                    if (unit_double(rng) < p_add[a.edge]) {
                        in_cluster[a.to] = 1;
                        stack.push_back(a.to);
                        cluster.push_back(a.to);
                    }
                }
            }
            for (int v : cluster) spin[v] = -spin[v];
            if (update >= cfg.burnin) {
                long m = 0;
                for (int8_t sv : spin) m += sv;
                m2_sum.add(double(m) * double(m));
                cluster_frac.add(double(cluster.size()) / n);
            }
        }
        results[chain].mean_m2 = m2_sum.value() / double(samples) / double(n);
        results[chain].aux = cluster_frac.value() / double(samples);
    }
    return aggregate(results, samples);
}

ScanReport scan_curve(const McConfig& base, const std::vector<BoundCurvePoint>& curve,
                      double margin, const std::vector<int>& sizes) {
    if (margin < 0.0 || margin > 1.0)
        throw std::invalid_argument("scan_curve: margin must lie in [0, 1]");
    if (sizes.empty()) throw std::invalid_argument("scan_curve: no torus sizes given");
    ScanReport report;
    for (const BoundCurvePoint& point : curve) {
        ScanPoint sp;
        sp.jd = point.jd;
        sp.js_bound = point.js_bound;
        sp.js_run = point.js_bound == kInf ? base.J.js : (1.0 - margin) * point.js_bound;
        for (int L : sizes) {
            McConfig cfg = base;
            cfg.L = L;
            cfg.J = {point.jd, sp.js_run};
            McEstimate est = run_wolff(cfg);
            sp.samples.push_back({L, est.proxy, est.std_error});
        }
        if (sp.samples.size() >= 2) {
            double a = sp.samples[sp.samples.size() - 2].proxy;
            double b = sp.samples.back().proxy;
            sp.last_rel_change = std::fabs(b - a) / std::max(std::fabs(a), 1e-12);
            sp.saturating = sp.last_rel_change < 0.10;
        }
        report.points.push_back(std::move(sp));
    }
    return report;
}

} // namespace aniso
