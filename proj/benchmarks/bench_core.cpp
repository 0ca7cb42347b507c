#include "cfseq/cfseq.hpp"

#include <benchmark/benchmark.h>

using namespace cfseq;

static void BM_GenerateXPlusOne(benchmark::State& state)
{
    const PolyF f = make_poly({1, 1});
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(generate(f, n));
}
BENCHMARK(BM_GenerateXPlusOne)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

static void BM_GenerateCubic(benchmark::State& state)
{
    const PolyF f = make_poly({1, 1, 0, 1});
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(generate(f, n));
}
BENCHMARK(BM_GenerateCubic)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_ExpandPartialSum(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const SeqTable t = generate(make_poly({1, 1}), n);
    const Rational s = partial_sum(t, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(cf_expand(s));
}
BENCHMARK(BM_ExpandPartialSum)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_VerifyTheorem(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const SeqTable t = generate(make_poly({1, 1, 1}), n);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_theorem1(t, n));
}
BENCHMARK(BM_VerifyTheorem)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_LogRatio(benchmark::State& state)
{
    const auto p = static_cast<unsigned>(state.range(0));
    const SeqTable t = generate(make_poly({1, 1}), 10);
    for (auto _ : state)
        benchmark::DoNotOptimize(log_ratio(t.x(10) + 1, t.x(10), p));
}
BENCHMARK(BM_LogRatio)->RangeMultiplier(4)->Range(64, 4096);

static void BM_EstimateC(benchmark::State& state)
{
    const SeqTable t = generate(make_poly({1, 1}), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_C(t));
}
BENCHMARK(BM_EstimateC)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
