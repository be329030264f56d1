#include <benchmark/benchmark.h>

#include "corequot/qseries.hpp"

using namespace corequot;

static void BM_EulerProductInverse(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto series = pochhammer_factor(-1, 1, 1, true, order);
        benchmark::DoNotOptimize(series);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EulerProductInverse)->RangeMultiplier(2)->Range(20, 160)->Complexity();

static void BM_ConstantTermProduct(benchmark::State& state) {
    for (auto _ : state) {
        auto series = constant_term_partition_gf(state.range(0), 40);
        benchmark::DoNotOptimize(series);
    }
}
BENCHMARK(BM_ConstantTermProduct)->DenseRange(1, 5);

static void BM_ThetaSumTCore(benchmark::State& state) {
    for (auto _ : state) {
        auto series = theta_sum_tcore(state.range(0), 40);
        benchmark::DoNotOptimize(series);
    }
}
BENCHMARK(BM_ThetaSumTCore)->DenseRange(2, 6);

static void BM_LittlewoodIdentity(benchmark::State& state) {
    for (auto _ : state) {
        auto report = verify_littlewood_gf(3, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_LittlewoodIdentity)->Arg(20)->Arg(40)->Arg(60);

BENCHMARK_MAIN();
