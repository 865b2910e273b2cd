#include <benchmark/benchmark.h>

#include "e8cat/linalg.hpp"
#include "e8cat/rng.hpp"

using namespace e8cat;

static void BM_rank_dense(benchmark::State& state) {
    Rng rng(1);
    size_t n = static_cast<size_t>(state.range(0));
    ExactMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = ExactScalar(rat(rng.int_in(-1, 1), 16));
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank_dense)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
