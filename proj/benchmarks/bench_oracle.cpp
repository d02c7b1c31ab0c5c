#include "isotwist/families.hpp"
#include "isotwist/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace isotwist;

namespace {

// Positive and negative discriminant take different AGM routes.
void BM_LatticeVolume(benchmark::State& state) {
    const auto bits = static_cast<unsigned>(state.range(0));
    const Signature s = l39_signatures(Rat(state.range(1) == 0 ? 1 : -5))[0];
    for (auto _ : state) benchmark::DoNotOptimize(lattice_volume(s, bits));
}
BENCHMARK(BM_LatticeVolume)->ArgsProduct({{64, 128, 512, 2048}, {0, 1}});

void BM_VerifyClass(benchmark::State& state) {
    const auto g = GraphType::parse("L3_9");
    for (auto _ : state) benchmark::DoNotOptimize(verify_class(g, Rat(45), 3));
}
BENCHMARK(BM_VerifyClass)->Unit(benchmark::kMillisecond);

void BM_SquarefreeSieve(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(squarefree_sieve(state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SquarefreeSieve)->Range(1 << 12, 1 << 20);

void BM_EmpiricalProb(benchmark::State& state) {
    const auto g = GraphType::parse("L3_9");
    for (auto _ : state) benchmark::DoNotOptimize(empirical_prob(g, Rat(3), state.range(0)));
}
BENCHMARK(BM_EmpiricalProb)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
