// bench_kernels: serial reference vs OpenMP grid evaluation

#include <benchmark/benchmark.h>

#include <omp.h>

#include "nanogp/constants.hpp"
#include "nanogp/material.hpp"
#include "nanogp/sweep/kernels.hpp"

namespace {

std::vector<nanogp::sweep::Row> rows(int n) {
    const auto model = nanogp::material::gaas_model();
    std::vector<nanogp::sweep::Row> r;
    for (int i = 0; i < n; ++i) {
        const double w = (0.9 + 0.3 * i / (n - 1.0)) * model.omega_r;
        r.push_back({model, 700e-9, w, {1.7e-6, 3.0e-6}, true});
    }
    return r;
}

void BM_Serial(benchmark::State& state) {
    const auto grid = rows(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(nanogp::sweep::evaluate_serial(grid, {}));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Parallel(benchmark::State& state) {
    const auto grid = rows(static_cast<int>(state.range(0)));
    const int jobs = std::max(2, omp_get_max_threads());
    for (auto _ : state) {
        benchmark::DoNotOptimize(nanogp::sweep::evaluate_parallel(grid, {}, jobs));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
    state.counters["jobs"] = jobs;
}

} // namespace

BENCHMARK(BM_Serial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
