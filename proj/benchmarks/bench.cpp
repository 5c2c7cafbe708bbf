#include <benchmark/benchmark.h>

#include "antimagic/certify.hpp"
#include "antimagic/closed_forms.hpp"
#include "antimagic/labeling.hpp"

namespace am = antimagic;

static void BM_LabelAll(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(am::label_all(n));
    state.SetComplexityN(n);
}
BENCHMARK(BM_LabelAll)->Arg(100)->Arg(300)->Arg(1000)->Complexity();

static void BM_LabelInverse(benchmark::State& state) {
    const std::int64_t n = 1000000;
    const std::int64_t total = am::pair_count(n);
    std::int64_t k = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(am::label_inverse(n, k));
        k = k % total + 987654321 % total;
    }
}
BENCHMARK(BM_LabelInverse);

static void BM_SumsReport(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(am::sums_report(n));
}
BENCHMARK(BM_SumsReport)->Arg(100)->Arg(500);

static void BM_Certify(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(am::certify(n));
}
BENCHMARK(BM_Certify)->Arg(20)->Arg(50)->Arg(100);

BENCHMARK_MAIN();
