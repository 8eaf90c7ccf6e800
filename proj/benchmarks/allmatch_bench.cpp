#include "allmatch/closed_forms.hpp"
#include "allmatch/counting.hpp"
#include "allmatch/estimator.hpp"
#include "allmatch/matrix.hpp"
#include "allmatch/rng.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace allmatch;

ZeroOneMatrix random_matrix(int m, int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::vector<int>> rows(m, std::vector<int>(n));
    for (auto& r : rows)
        for (auto& v : r) v = static_cast<int>(rng.next() & 1);
    return make_matrix(rows);
}

void BM_am_dp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ZeroOneMatrix a = random_matrix(n, n, 0xB0);
    for (auto _ : state) {
        ExactCount v = am_dp(a);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_am_dp)->DenseRange(12, 20, 2)->Unit(benchmark::kMillisecond);

void BM_permanent(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ZeroOneMatrix a = random_matrix(n, n, 0xB1);
    for (auto _ : state) {
        ExactCount v = permanent(a);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_permanent)->DenseRange(12, 24, 4)->Unit(benchmark::kMillisecond);

void BM_amm_sample(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ZeroOneMatrix a = random_matrix(n, n, 0xB2);
    SplitMix64 rng(7);
    for (auto _ : state) {
        ExactCount v = amm_sample(a, rng);
        benchmark::DoNotOptimize(v);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_amm_sample)->Arg(10)->Arg(25)->Arg(50);

void BM_rm_sample(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ZeroOneMatrix a = random_matrix(n, n, 0xB3);
    SplitMix64 rng(7);
    for (auto _ : state) {
        ExactCount v = rm_sample(a, rng);
        benchmark::DoNotOptimize(v);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_rm_sample)->Arg(10)->Arg(25)->Arg(50);

void BM_run_batch_workers(benchmark::State& state) {
    const int workers = static_cast<int>(state.range(0));
    const ZeroOneMatrix a = random_matrix(30, 30, 0xB4);
    for (auto _ : state) {
        SampleStats s = run_batch(a, Algorithm::AMM, 20000, 11, workers);
        benchmark::DoNotOptimize(s.sum);
    }
    state.SetItemsProcessed(state.iterations() * 20000);
}
BENCHMARK(BM_run_batch_workers)->Arg(1)->Arg(2)->Arg(4)->Arg(8)
    ->Unit(benchmark::kMillisecond);

void BM_exact_second_moment(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ZeroOneMatrix a = random_matrix(n, n, 0xB5);
    for (auto _ : state) {
        ExactCount v = exact_second_moment(a, Algorithm::AMM);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_exact_second_moment)->DenseRange(8, 16, 4)
    ->Unit(benchmark::kMillisecond);

void BM_t4_second_moment(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ExactRational v = t4_second_moment(n, n);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_t4_second_moment)->Arg(20)->Arg(40);

void BM_t6_ratio(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        RatioReport r = t6_ratio(n);
        benchmark::DoNotOptimize(r.ratio);
    }
}
BENCHMARK(BM_t6_ratio)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_t8_moments(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        T8Moments m = t8_moments(13L * n * n / 25, n);
        benchmark::DoNotOptimize(m.second);
    }
}
BENCHMARK(BM_t8_moments)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
