// Parallel kernels against their serial references.

#include "pendulum/chart.hpp"
#include "pendulum/floquet.hpp"

#include <benchmark/benchmark.h>

using namespace pendulum;

namespace {

ChartSpec bench_spec() {
    ChartSpec s = chart_preset("fig4");
    s.n_alpha = 81;
    s.n_eps = 41;
    s.overlay_orders.clear();
    return s;
}

std::vector<double> eps_grid() {
    std::vector<double> g;
    for (int k = 1; k <= 16; ++k) g.push_back(0.0125 * k);
    return g;
}

void BM_classify_grid(benchmark::State& st) {
    const ChartSpec s = bench_spec();
    for (auto _ : st) benchmark::DoNotOptimize(classify_grid(s));
    st.SetItemsProcessed(st.iterations() * s.n_alpha * s.n_eps);
}

void BM_classify_grid_serial(benchmark::State& st) {
    const ChartSpec s = bench_spec();
    for (auto _ : st) benchmark::DoNotOptimize(classify_grid_serial(s));
    st.SetItemsProcessed(st.iterations() * s.n_alpha * s.n_eps);
}

void BM_sweep_tongue_edges(benchmark::State& st) {
    const auto g = eps_grid();
    for (auto _ : st) benchmark::DoNotOptimize(sweep_tongue_edges(Equilibrium::P1, -0.5, 2, g, 4000));
}

void BM_sweep_tongue_edges_serial(benchmark::State& st) {
    const auto g = eps_grid();
    for (auto _ : st) benchmark::DoNotOptimize(sweep_tongue_edges_serial(Equilibrium::P1, -0.5, 2, g, 4000));
}

}  // namespace

BENCHMARK(BM_classify_grid)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_classify_grid_serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sweep_tongue_edges)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sweep_tongue_edges_serial)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
