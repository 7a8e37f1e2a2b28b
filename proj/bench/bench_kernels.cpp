// Serial reference vs OpenMP path for each parallel kernel.

#include <benchmark/benchmark.h>

#include "antimagic/number_theory.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/sweeps.hpp"

using namespace antimagic;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void BM_Constructions(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sweep_constructions(40, mode(state)));
}

void BM_TauIdentity(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sweep_tau_identity(2, 1000000, mode(state)));
}

void BM_PairFamilies(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sweep_pair_families(2, 20000, mode(state)));
}

void BM_StSubsets(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sweep_st_subsets(20, 12, mode(state)));
}

void BM_RefuteDoubleStar(benchmark::State& state) {
    const Forest g = parse_forest("S(1,1)+3*P3");
    SearchOptions o;
    o.execution = mode(state);
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_antimagic(g, o));
}

void BM_OneOneCensus(benchmark::State& state) {
    const auto shapes = census_shapes(20, 14);
    SearchOptions o;
    o.execution = mode(state);
    for (auto _ : state) {
        for (const auto& g : shapes) benchmark::DoNotOptimize(search_11(g, o));
    }
}

}  // namespace

// Argument 0 = serial reference, 1 = OpenMP.
BENCHMARK(BM_Constructions)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TauIdentity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairFamilies)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StSubsets)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RefuteDoubleStar)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OneOneCensus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
