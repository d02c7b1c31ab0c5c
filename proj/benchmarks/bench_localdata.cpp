#include "isotwist/families.hpp"
#include "isotwist/localdata.hpp"

#include <benchmark/benchmark.h>

using namespace isotwist;

namespace {

Signature curve_121a2() { return signature_of(parse_ainvariants("1,1,1,-30,-76")); }

void BM_ClassifyAtEleven(benchmark::State& state) {
    const Signature s = curve_121a2();
    for (auto _ : state) benchmark::DoNotOptimize(classify(s, 11));
}
BENCHMARK(BM_ClassifyAtEleven);

void BM_ClassifyAtTwo(benchmark::State& state) {
    const Signature s = transform(l39_signatures(Rat(mpz_class(45), mpz_class(8)))[0], Rat(1, 2));
    for (auto _ : state) benchmark::DoNotOptimize(classify(s, 2));
}
BENCHMARK(BM_ClassifyAtTwo);

// Cost grows with the size of t through the factorization of c4, c6 and delta.
void BM_GlobalMinimal(benchmark::State& state) {
    const Rat t(mpz_class(1) << static_cast<unsigned>(state.range(0)), mpz_class(7));
    const Signature s = l39_signatures(t + Rat(3))[0];
    for (auto _ : state) benchmark::DoNotOptimize(global_minimal(s));
}
BENCHMARK(BM_GlobalMinimal)->RangeMultiplier(4)->Range(4, 256);

void BM_TwistScale(benchmark::State& state) {
    const Signature m = global_minimal(l39_signatures(Rat(45))[0]).first;
    for (auto _ : state) benchmark::DoNotOptimize(twist_scale(m, -33));
}
BENCHMARK(BM_TwistScale);

}  // namespace

BENCHMARK_MAIN();
