// Profile throughput: the OpenMP kernel against the serial reference, and
// the exact backend against the approximate one.

#include "colsig/bounds.hpp"
#include "colsig/corpus.hpp"
#include "colsig/inertia.hpp"

#include <benchmark/benchmark.h>

using namespace colsig;

namespace {

// trefoil summed with itself k times: g = 2k.
CComplexData stacked_trefoil(int k) {
    const std::size_t g = 2 * static_cast<std::size_t>(k);
    IntMatrix a(g, g);
    for (std::size_t b = 0; b < g; b += 2) {
        a(b, b) = -1;
        a(b, b + 1) = 1;
        a(b + 1, b + 1) = -1;
    }
    return CComplexData::from_seifert_matrix(a);
}

EvalOptions backend(int64_t b) {
    EvalOptions o;
    o.backend = b == 0 ? Backend::Exact : Backend::Approx;
    return o;
}

void BM_profile_serial(benchmark::State& state) {
    const auto cc = stacked_trefoil(static_cast<int>(state.range(0)));
    const auto grid = default_grid(1);
    const auto opts = backend(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(torus_profile_serial(cc, grid, opts));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}

void BM_profile_parallel(benchmark::State& state) {
    const auto cc = stacked_trefoil(static_cast<int>(state.range(0)));
    const auto grid = default_grid(1);
    const auto opts = backend(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(torus_profile(cc, grid, opts));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}

void BM_obstruction_two_colors(benchmark::State& state) {
    const auto a = corpus_entry("hopf2")->cc;
    const auto grid = default_grid(2);
    for (auto _ : state) benchmark::DoNotOptimize(concordance_obstruction(a, a, grid));
}

// Args: {trefoil copies, backend (0 exact, 1 approx)}.
void sizes(benchmark::internal::Benchmark* b) {
    for (int k : {1, 2, 4})
        for (int be : {0, 1}) b->Args({k, be});
}

}  // namespace

BENCHMARK(BM_profile_serial)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_profile_parallel)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_obstruction_two_colors)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
