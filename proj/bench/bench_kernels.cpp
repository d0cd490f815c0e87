#include "nrshift/nrange.hpp"
#include "nrshift/rif.hpp"
#include "nrshift/symbol.hpp"

#include <benchmark/benchmark.h>

using namespace nrshift;

namespace {

RifProduct example() {
    return RifProduct({factor_from_coeffs(2, -1, -1, 0), factor_from_coeffs(3, -1, -2, 0),
                       factor_from_coeffs(3, -1, -1, -1)});
}

void BM_RegionHull(benchmark::State& state) {
    const MatrixSymbol m = build_symbol(example());
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(region_hull(m, n, n));
}

void BM_RegionHullSerial(benchmark::State& state) {
    const MatrixSymbol m = build_symbol(example());
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(region_hull_serial(m, n, n));
}

void BM_BasisGram(benchmark::State& state) {
    const RifProduct theta = example();
    for (auto _ : state) benchmark::DoNotOptimize(basis_gram(theta, static_cast<int>(state.range(0))));
}

void BM_BasisGramSerial(benchmark::State& state) {
    const RifProduct theta = example();
    for (auto _ : state) benchmark::DoNotOptimize(basis_gram_serial(theta, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_RegionHull)->Arg(128)->Arg(360)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegionHullSerial)->Arg(128)->Arg(360)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BasisGram)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BasisGramSerial)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
