#include <benchmark/benchmark.h>

#include <sstream>

#include "splitclust/approx.hpp"
#include "splitclust/detect.hpp"
#include "splitclust/exact.hpp"
#include "splitclust/gen.hpp"
#include "splitclust/kernel.hpp"

namespace {

using namespace splitclust;

// Dense blue clusters with a few flipped pairs keep opt small enough for the
// exact solver while still exercising splits.
CorrelationGraph fixture(std::size_t n, std::uint64_t seed) { return gen_random(n, 0.6, 0.4, true, seed); }

void BM_Approximate(benchmark::State& state) {
    auto g = fixture(static_cast<std::size_t>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(approximate(g));
}
BENCHMARK(BM_Approximate)->RangeMultiplier(2)->Range(8, 128);

void BM_LowerBound(benchmark::State& state) {
    auto g = fixture(static_cast<std::size_t>(state.range(0)), 12);
    for (auto _ : state) benchmark::DoNotOptimize(lower_bound(g));
}
BENCHMARK(BM_LowerBound)->RangeMultiplier(2)->Range(8, 256);

void BM_SolveExact(benchmark::State& state) {
    auto g = fixture(static_cast<std::size_t>(state.range(0)), 13);
    for (auto _ : state) benchmark::DoNotOptimize(solve_exact(g));
}
BENCHMARK(BM_SolveExact)->DenseRange(4, 7);

void BM_Kernelize(benchmark::State& state) {
    auto g = fixture(static_cast<std::size_t>(state.range(0)), 14);
    // A budget at the lower bound gets past the early cutoff and runs every rule.
    const auto k = lower_bound(g) + 1;
    for (auto _ : state) benchmark::DoNotOptimize(kernelize(g, k));
}
BENCHMARK(BM_Kernelize)->RangeMultiplier(2)->Range(16, 256);

void BM_VerifyClustering(benchmark::State& state) {
    auto g = fixture(static_cast<std::size_t>(state.range(0)), 15);
    auto f = approximate(g);
    for (auto _ : state) benchmark::DoNotOptimize(verify_clustering(g, f));
}
BENCHMARK(BM_VerifyClustering)->RangeMultiplier(2)->Range(8, 128);

void BM_ParseGraph(benchmark::State& state) {
    auto text = to_ccg(fixture(static_cast<std::size_t>(state.range(0)), 16));
    for (auto _ : state) benchmark::DoNotOptimize(parse_graph(text));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseGraph)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace

BENCHMARK_MAIN();
