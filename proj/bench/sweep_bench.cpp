// Compares the serial reference sweeps against the OpenMP kernels on a
// fine grid. Run with --benchmark_min_time=... as needed.

#include <benchmark/benchmark.h>

#include "trustmodel/catalog.hpp"
#include "trustmodel/sweep.hpp"

namespace {

using namespace trustmodel;

ThresholdSweepParams fine_threshold_params(double step) {
    ThresholdSweepParams params;
    params.upper = {0.51, 1.0, step};
    params.history = AuthRatios{0.4, 0.9};
    return params;
}

PenaltySweepParams fine_penalty_params(double step) {
    PenaltySweepParams params;
    params.upper = {0.51, 1.0, step};
    return params;
}

void BM_ThresholdSweepSerial(benchmark::State& state) {
    const auto& catalog = default_catalog();
    const auto params = fine_threshold_params(1.0 / static_cast<double>(state.range(0)));
    for (auto _ : state) {
        auto rows = sweep_thresholds_serial(catalog, params);
        benchmark::DoNotOptimize(rows.data());
    }
}

void BM_ThresholdSweepParallel(benchmark::State& state) {
    const auto& catalog = default_catalog();
    const auto params = fine_threshold_params(1.0 / static_cast<double>(state.range(0)));
    for (auto _ : state) {
        auto rows = sweep_thresholds(catalog, params);
        benchmark::DoNotOptimize(rows.data());
    }
}

void BM_PenaltySweepSerial(benchmark::State& state) {
    const auto& catalog = default_catalog();
    const auto params = fine_penalty_params(1.0 / static_cast<double>(state.range(0)));
    for (auto _ : state) {
        auto rows = sweep_penalty_serial(catalog, params);
        benchmark::DoNotOptimize(rows.data());
    }
}

void BM_PenaltySweepParallel(benchmark::State& state) {
    const auto& catalog = default_catalog();
    const auto params = fine_penalty_params(1.0 / static_cast<double>(state.range(0)));
    for (auto _ : state) {
        auto rows = sweep_penalty(catalog, params);
        benchmark::DoNotOptimize(rows.data());
    }
}

}  // namespace

BENCHMARK(BM_ThresholdSweepSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThresholdSweepParallel)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PenaltySweepSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PenaltySweepParallel)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
