#include <benchmark/benchmark.h>

#include "markovrank/markovrank.hpp"

using namespace mrank;

namespace {

void BM_PageRankExact(benchmark::State& state) {
    const auto a = gen_er(static_cast<std::size_t>(state.range(0)), 0.1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(pagerank(a, 0.85));
}

void BM_PageRankPower(benchmark::State& state) {
    const auto a = gen_er(static_cast<std::size_t>(state.range(0)), 0.1, 1);
    RankOptions opts;
    opts.method = Method::power;
    for (auto _ : state) benchmark::DoNotOptimize(pagerank(a, 0.85, opts));
}

void BM_MarkovRankExact(benchmark::State& state) {
    const auto a = gen_er(static_cast<std::size_t>(state.range(0)), 0.1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(markovrank(a, 1.0));
}

void BM_IsRegular(benchmark::State& state) {
    const auto m = transition_from_patched(patch_zero_rows(gen_er(static_cast<std::size_t>(state.range(0)), 0.05, 1)));
    for (auto _ : state) benchmark::DoNotOptimize(is_regular(m));
}

void BM_RankStatistic(benchmark::State& state) {
    SplitMix64 rng(3);
    std::vector<double> v(static_cast<std::size_t>(state.range(0)));
    for (double& x : v) x = rng.uniform();
    for (auto _ : state) benchmark::DoNotOptimize(rank_statistic(v));
}

}  // namespace

BENCHMARK(BM_PageRankExact)->Arg(50)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PageRankPower)->Arg(50)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MarkovRankExact)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsRegular)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankStatistic)->Arg(1000)->Arg(100000);
BENCHMARK_MAIN();
