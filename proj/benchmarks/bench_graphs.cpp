#include "isotwist/graphs.hpp"

#include <benchmark/benchmark.h>

using namespace isotwist;

namespace {

void BM_FaltingsByTheorem(benchmark::State& state) {
    const auto g = GraphType::parse("L3_9");
    long d = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(faltings_by_theorem(g, Rat(45), d));
        d = d == 1 ? 3 : 1;
    }
}
BENCHMARK(BM_FaltingsByTheorem);

void BM_FaltingsByVolumes(benchmark::State& state) {
    const auto g = GraphType::parse(state.range(0) == 0 ? "L3_9" : "T8");
    const Rat t = state.range(0) == 0 ? Rat(45) : Rat(16);
    for (auto _ : state) benchmark::DoNotOptimize(faltings_by_volumes(g, t, 5));
}
BENCHMARK(BM_FaltingsByVolumes)->Arg(0)->Arg(1);

void BM_ProbTable(benchmark::State& state) {
    const auto g = GraphType::parse("R4_10");
    for (auto _ : state) benchmark::DoNotOptimize(prob_table(g, Rat(14)));
}
BENCHMARK(BM_ProbTable);

}  // namespace

BENCHMARK_MAIN();
