#include <benchmark/benchmark.h>

#include <cmath>

#include "aniso/backbone.hpp"
#include "aniso/currents.hpp"
#include "aniso/instances.hpp"
#include "aniso/lattice.hpp"
#include "aniso/montecarlo.hpp"
#include "aniso/spin_oracle.hpp"
#include "aniso/susceptibility.hpp"

/// Microbenchmarks for the enumeration cores.  These exist to keep the
/// scaling walls visible (2^dim even subgraphs, 2^n spin states, DFS path
/// trees, 2^width transfer states), not to gate anything: run manually via
/// the aniso_bench binary.

namespace {

using namespace aniso;

/// T(U) over 3 × cols grids; cyclomatic dimension is 2 (cols - 1).
void BM_even_subgraph_sum(benchmark::State& state) {
    const int cols = static_cast<int>(state.range(0));
    Graph g = grid_graph(3, cols);
    EdgeWeights J(g.edge_count(), 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(even_tanh_sum(g, J, g.all_edges()));
    state.counters["cycle_dim"] = 2.0 * (cols - 1);
}
BENCHMARK(BM_even_subgraph_sum)->Arg(3)->Arg(5)->Arg(7)->Arg(9);

/// S(U; corner, corner) on the same grids (one extra Gray sweep).
void BM_sourced_sum(benchmark::State& state) {
    const int cols = static_cast<int>(state.range(0));
    Graph g = grid_graph(3, cols);
    EdgeWeights J(g.edge_count(), 0.4);
    const int y = g.vertex_count() - 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(sourced_tanh_sum(g, J, g.all_edges(), 0, y));
    state.counters["cycle_dim"] = 2.0 * (cols - 1);
}
BENCHMARK(BM_sourced_sum)->Arg(3)->Arg(5)->Arg(7);

/// Gray-code sweep over all 2^n spin states of an n-vertex path.
void BM_partition_spin(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = path_graph(n);
    EdgeWeights J(g.edge_count(), 0.35);
    for (auto _ : state) benchmark::DoNotOptimize(partition_spin(g, J));
    state.SetItemsProcessed(state.iterations() * (1ll << n));
}
BENCHMARK(BM_partition_spin)->Arg(12)->Arg(16)->Arg(20);

/// Exhaustive first-passage consistent-path DFS from a grid corner.
void BM_consistent_paths(benchmark::State& state) {
    const int cols = static_cast<int>(state.range(0));
    Graph g = grid_graph(3, cols);
    long long count = 0;
    for (auto _ : state) {
        count = 0;
        for_each_consistent_path(g, g.all_edges(), 0,
                                 [&](const ConsistentPath&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
    state.counters["paths"] = static_cast<double>(count);
}
BENCHMARK(BM_consistent_paths)->Arg(3)->Arg(4);

/// Metropolis sweep rate on the (1+1) torus; items = spin-flip attempts.
void BM_metropolis(benchmark::State& state) {
    McConfig cfg;
    cfg.d = 1;
    cfg.s = 1;
    cfg.L = static_cast<int>(state.range(0));
    cfg.J = {0.3, 0.1};
    cfg.sweeps = 256;
    cfg.burnin = 32;
    cfg.chains = 2;
    cfg.seed = 99;
    const long long sites = 1ll * cfg.L * cfg.L;
    for (auto _ : state) benchmark::DoNotOptimize(run_metropolis(cfg));
    state.SetItemsProcessed(state.iterations() * cfg.chains * cfg.sweeps * sites);
}
BENCHMARK(BM_metropolis)->Arg(4)->Arg(8)->Arg(16);

/// Wolff cluster-update rate on the same tori; items = cluster updates.
void BM_wolff(benchmark::State& state) {
    McConfig cfg;
    cfg.d = 1;
    cfg.s = 1;
    cfg.L = static_cast<int>(state.range(0));
    cfg.J = {0.3, 0.1};
    cfg.sweeps = 256;
    cfg.burnin = 32;
    cfg.chains = 2;
    cfg.seed = 99;
    for (auto _ : state) benchmark::DoNotOptimize(run_wolff(cfg));
    state.SetItemsProcessed(state.iterations() * cfg.chains * cfg.sweeps);
}
BENCHMARK(BM_wolff)->Arg(4)->Arg(8)->Arg(16);

/// Row-to-row transfer with correlation accumulation; 2^width states.
void BM_strip_transfer(benchmark::State& state) {
    const int width = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(chi_2d_strip(width, 48, 0.4));
    state.counters["states"] = std::ldexp(1.0, width);
}
BENCHMARK(BM_strip_transfer)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

} // namespace

BENCHMARK_MAIN();
