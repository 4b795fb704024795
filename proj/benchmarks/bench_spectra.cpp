#include <benchmark/benchmark.h>

#include "andrasfai/circulant.hpp"
#include "andrasfai/closed_form.hpp"
#include "andrasfai/eigen_oracle.hpp"
#include "andrasfai/verifier.hpp"

using namespace andrasfai;

static void BM_ClosedForm(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(spectrum_closed_form(k));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClosedForm)->RangeMultiplier(4)->Range(4, 1024)->Complexity(benchmark::oNSquared);

static void BM_GeneralCirculant(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto row = andrasfai_graph(k).first_row();
    for (auto _ : state) benchmark::DoNotOptimize(spectrum_general_circulant(row));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GeneralCirculant)->RangeMultiplier(4)->Range(4, 1024)->Complexity(benchmark::oNSquared);

// Dense O(n^3) per sweep; keep the range small.
static void BM_JacobiOracle(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto adjacency = adjacency_matrix(andrasfai_graph(k));
    for (auto _ : state) benchmark::DoNotOptimize(jacobi_eigenvalues(adjacency));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_JacobiOracle)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMillisecond);

static void BM_PairMultiplicities(benchmark::State& state) {
    const auto spectrum = spectrum_closed_form(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(pair_multiplicities(spectrum));
}
BENCHMARK(BM_PairMultiplicities)->Arg(64)->Arg(512);

static void BM_SweepClosedFormOnly(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(2, static_cast<std::size_t>(state.range(0)), 0));
}
BENCHMARK(BM_SweepClosedFormOnly)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
