#include <benchmark/benchmark.h>

#include "fracdecomp/cliques.hpp"
#include "fracdecomp/gadgets.hpp"
#include "fracdecomp/generators.hpp"
#include "fracdecomp/pipeline.hpp"

using namespace fracdecomp;

static void BM_SolveAlpha(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_alpha(r, 2).alpha.data());
}
BENCHMARK(BM_SolveAlpha)->Arg(5)->Arg(12)->Arg(24);

static void BM_AveragedGadget(benchmark::State& state) {
    auto g = gen_complete(static_cast<std::size_t>(state.range(0)), 2);
    const int r = static_cast<int>(state.range(1));
    std::vector<Vertex> e{0, 1};
    auto H = extension_family_He(g, e, r);
    for (auto _ : state) benchmark::DoNotOptimize(averaged_edge_gadget(g, e, r, H).size());
}
BENCHMARK(BM_AveragedGadget)->Args({14, 3})->Args({14, 4})->Args({16, 5})->Unit(benchmark::kMillisecond);

// All edges corrected at once; exercises host accumulation and the rational flush.
static void BM_SmoothCorrection(benchmark::State& state) {
    auto g = gen_complete(static_cast<std::size_t>(state.range(0)), 2);
    const int r = static_cast<int>(state.range(1));
    auto fam = enumerate_cliques(g, r);
    std::vector<Rational> pi(g.edge_count(), Rational(1, 1000));
    Rational kappa(static_cast<unsigned long>(fam.size()));
    for (auto _ : state)
        benchmark::DoNotOptimize(smooth_correction_dense(g, r, fam, pi, kappa, Regime::relaxed, 1).size());
}
BENCHMARK(BM_SmoothCorrection)->Args({14, 3})->Args({18, 4})->Args({20, 4})->Unit(benchmark::kMillisecond);

static void BM_VertexGadget(benchmark::State& state) {
    auto g = gen_complete(static_cast<std::size_t>(state.range(0)), 2);
    const int r = static_cast<int>(state.range(1));
    GadgetContext ctx(g, r, Rational(1, static_cast<unsigned long>(g.n())), {}, Regime::relaxed, 1);
    for (auto _ : state) benchmark::DoNotOptimize(vertex_gadget_dense(ctx, 0).xi.size());
}
BENCHMARK(BM_VertexGadget)->Args({12, 4})->Args({14, 5})->Unit(benchmark::kMillisecond);
