#include <benchmark/benchmark.h>

#include "locol/coloring.hpp"
#include "locol/constructions.hpp"
#include "locol/corona.hpp"
#include "locol/distance.hpp"
#include "locol/solver.hpp"

namespace {

using namespace locol;

void BM_AllPairsDistances(benchmark::State& state) {
    const Graph g = corona(cycle_graph(static_cast<int>(state.range(0))), path_graph(3)).graph;
    for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g));
    state.SetComplexityN(g.order());
}
BENCHMARK(BM_AllPairsDistances)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_VerifyStarCorona(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = corona(star_graph(n), empty_graph(1)).graph;
    const Coloring c = star_corona_coloring(n).coloring;
    for (auto _ : state) benchmark::DoNotOptimize(verify(g, c));
}
BENCHMARK(BM_VerifyStarCorona)->Arg(10)->Arg(50)->Arg(200);

void BM_ChiFixture(benchmark::State& state) {
    const Graph g = p3_corona_p2_c4_fixture().product.graph;
    for (auto _ : state) benchmark::DoNotOptimize(chi_L(g));
}
BENCHMARK(BM_ChiFixture)->Unit(benchmark::kMillisecond);

void BM_ChiPathCorona(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = corona(path_graph(n), path_graph(n)).graph;
    for (auto _ : state) benchmark::DoNotOptimize(chi_L(g));
}
BENCHMARK(BM_ChiPathCorona)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_StarCoronaConstruction(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(star_corona_coloring(n));
}
BENCHMARK(BM_StarCoronaConstruction)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
