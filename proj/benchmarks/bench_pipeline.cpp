#include <benchmark/benchmark.h>

#include "fracdecomp/generators.hpp"
#include "fracdecomp/oracle.hpp"
#include "fracdecomp/pipeline.hpp"

using namespace fracdecomp;

static void BM_HypergraphExact(benchmark::State& state) {
    auto g = gen_random_min_degree(static_cast<std::size_t>(state.range(0)), 2, Rational(1, 10), 8);
    const int r = static_cast<int>(state.range(1));
    PipelineOptions opt;
    opt.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(decompose_hypergraph(g, r, opt).certificate.feasible);
}
BENCHMARK(BM_HypergraphExact)->Args({30, 3})->Args({40, 4})->Unit(benchmark::kMillisecond);

// Non-certifying floating-point variant, for comparison only.
static void BM_HypergraphFloat(benchmark::State& state) {
    auto g = gen_random_min_degree(static_cast<std::size_t>(state.range(0)), 2, Rational(1, 10), 8);
    const int r = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(decompose_hypergraph_float(g, r, 1));
}
BENCHMARK(BM_HypergraphFloat)->Args({30, 3})->Args({40, 4})->Unit(benchmark::kMillisecond);

static void BM_R2Relaxed(benchmark::State& state) {
    auto g = gen_complete(static_cast<std::size_t>(state.range(0)), 2);
    PipelineOptions opt;
    opt.regime = Regime::relaxed;
    opt.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(decompose_r2(g, 4, opt).certificate.feasible);
}
BENCHMARK(BM_R2Relaxed)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_LpOracle(benchmark::State& state) {
    auto g = gen_complete(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(lp_feasible(g, 3).feasible);
}
BENCHMARK(BM_LpOracle)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
