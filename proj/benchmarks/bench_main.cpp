#include <benchmark/benchmark.h>

#include "dfun/legendre.hpp"
#include "dfun/polytope.hpp"
#include "dfun/random.hpp"
#include "dfun/transforms.hpp"

#include <vector>

using namespace dfun;

static void BM_Conjugate2D(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const GridFunction f = generate_random_logconcave(1, 2, 4, LogConcaveParams{n, 5.0});
    const BoxDomain dual = symmetric_dual(f.domain(), f.log_values(), DualGridSpec{});
    for (auto _ : state) benchmark::DoNotOptimize(conjugate_tensor(f.domain(), f.log_values(), dual));
    state.SetComplexityN(static_cast<long>(f.size()));
}
BENCHMARK(BM_Conjugate2D)->RangeMultiplier(2)->Range(64, 512)->Complexity();

static void BM_DirectDelta1D(benchmark::State& state) {
    const GridFunction f = generate_random_logconcave(1, 1, 3, LogConcaveParams{static_cast<std::size_t>(state.range(0)), 6.0});
    for (auto _ : state) benchmark::DoNotOptimize(difference_function(f, AlphaParam::zero(), Route::Direct));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DirectDelta1D)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

static void BM_ConjugateDelta2D(benchmark::State& state) {
    const GridFunction f = generate_random_logconcave(1, 2, 3, LogConcaveParams{static_cast<std::size_t>(state.range(0)), 5.0});
    for (auto _ : state) benchmark::DoNotOptimize(difference_function(f, AlphaParam::zero(), Route::Conjugate));
}
BENCHMARK(BM_ConjugateDelta2D)->Arg(65)->Arg(129)->Arg(257);

static void BM_Hull3D(benchmark::State& state) {
    CounterRng rng(7);
    std::vector<Point> pts(static_cast<std::size_t>(state.range(0)));
    for (Point& p : pts) p = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    for (auto _ : state) benchmark::DoNotOptimize(convex_hull(3, pts));
}
BENCHMARK(BM_Hull3D)->Arg(100)->Arg(1000);

static void BM_DifferenceBody2D(benchmark::State& state) {
    const Polytope p = generate_random_polytope(3, 2, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(volume(difference_body(p)));
}
BENCHMARK(BM_DifferenceBody2D)->Arg(8)->Arg(64);

BENCHMARK_MAIN();
