#include <benchmark/benchmark.h>

#include "fracdecomp/cliques.hpp"
#include "fracdecomp/generators.hpp"

using namespace fracdecomp;

static void BM_EnumerateComplete(benchmark::State& state) {
    auto g = gen_complete(static_cast<std::size_t>(state.range(0)), 2);
    const int r = static_cast<int>(state.range(1));
    std::size_t total = 0;
    for (auto _ : state) {
        auto fam = enumerate_cliques(g, r, {0, 1});
        total = fam.size();
        benchmark::DoNotOptimize(fam.flat().data());
    }
    state.counters["cliques"] = static_cast<double>(total);
    state.counters["rate"] = benchmark::Counter(static_cast<double>(total), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_EnumerateComplete)->Args({40, 3})->Args({40, 4})->Args({40, 5})->Unit(benchmark::kMillisecond);

static void BM_CountRandom(benchmark::State& state) {
    auto g = gen_random_min_degree(static_cast<std::size_t>(state.range(0)), 2, Rational(1, 10), 3);
    const int r = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(count_cliques(g, r, 1));
}
BENCHMARK(BM_CountRandom)->Args({60, 4})->Args({60, 5})->Args({100, 4})->Unit(benchmark::kMillisecond);

static void BM_FamilyFind(benchmark::State& state) {
    auto g = gen_complete(30, 2);
    auto fam = enumerate_cliques(g, 4);
    std::size_t i = 0, hits = 0;
    for (auto _ : state) {
        hits += fam.find(fam[i]) != CliqueFamily::npos;
        i = (i + 7919) % fam.size();
    }
    benchmark::DoNotOptimize(hits);
}
BENCHMARK(BM_FamilyFind);

static void BM_Extensions(benchmark::State& state) {
    auto g = gen_random_min_degree(80, 2, Rational(1, 10), 5);
    const int r = static_cast<int>(state.range(0));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(extensions_u64(g, g.edge(i), r));
        i = (i + 1) % g.edge_count();
    }
}
BENCHMARK(BM_Extensions)->Arg(4)->Arg(5)->Arg(6);
