#include <benchmark/benchmark.h>

#include <vector>

#include "spikenorm/decompose.hpp"
#include "spikenorm/lif.hpp"
#include "spikenorm/norms.hpp"
#include "spikenorm/rng.hpp"
#include "spikenorm/spike_train.hpp"

namespace {

using namespace spikenorm;

SpikeTrain bench_train(int n, double lo = -2.0, double hi = 2.0) {
    SplitMix64 rng = trial_rng(42, static_cast<std::uint64_t>(n));
    std::vector<Spike> events;
    events.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        events.push_back(Spike{static_cast<double>(k + 1), rng.uniform(lo, hi)});
    }
    return SpikeTrain(std::move(events));
}

void BM_AlexiewiczIncremental(benchmark::State& state) {
    const SpikeTrain eta = bench_train(static_cast<int>(state.range(0)));
    const Leak alpha(1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(alexiewicz_norm(eta, alpha));
    }
}
BENCHMARK(BM_AlexiewiczIncremental)->Range(64, 8192);

void BM_AlexiewiczDirect(benchmark::State& state) {
    const SpikeTrain eta = bench_train(static_cast<int>(state.range(0)));
    const Leak alpha(1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(alexiewicz_norm_direct(eta, alpha));
    }
}
BENCHMARK(BM_AlexiewiczDirect)->Range(64, 1024);

void BM_DiscrepancyZeroLeak(benchmark::State& state) {
    const SpikeTrain eta = bench_train(static_cast<int>(state.range(0)));
    const Leak alpha(0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(discrepancy_norm(eta, alpha));
    }
}
BENCHMARK(BM_DiscrepancyZeroLeak)->Range(64, 8192);

void BM_DiscrepancyLeaky(benchmark::State& state) {
    const SpikeTrain eta = bench_train(static_cast<int>(state.range(0)));
    const Leak alpha(1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(discrepancy_norm(eta, alpha));
    }
}
BENCHMARK(BM_DiscrepancyLeaky)->Range(64, 1024);

void BM_LifEventDriven(benchmark::State& state) {
    const SpikeTrain eta = bench_train(static_cast<int>(state.range(0)));
    const LifConfig cfg{1.0, Leak(1.0), ResetMode::kToMod};
    for (auto _ : state) {
        benchmark::DoNotOptimize(lif(eta, cfg));
    }
}
BENCHMARK(BM_LifEventDriven)->Range(64, 8192);

void BM_LifDiscrete(benchmark::State& state) {
    const SpikeTrain eta = bench_train(static_cast<int>(state.range(0)));
    const DiscreteLifConfig cfg{{1.0, Leak(1.0), ResetMode::kToMod}, 1.0,
                                BetaMode::kExactExp};
    const std::vector<double> grid = to_grid(eta, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lif_discrete(grid, cfg));
    }
}
BENCHMARK(BM_LifDiscrete)->Range(64, 8192);

void BM_UnitDecompose(benchmark::State& state) {
    SplitMix64 rng = trial_rng(43, static_cast<std::uint64_t>(state.range(0)));
    std::vector<Spike> events;
    std::int64_t s = 0;
    for (int k = 0; k < state.range(0); ++k) {
        std::int64_t next = s;
        while (next == s) {
            next = static_cast<std::int64_t>(rng.below(13)) - 6;
        }
        events.push_back(
            Spike{static_cast<double>(k), static_cast<double>(next - s)});
        s = next;
    }
    const SpikeTrain psi(std::move(events));
    for (auto _ : state) {
        benchmark::DoNotOptimize(unit_decompose(psi, 1.0));
    }
}
BENCHMARK(BM_UnitDecompose)->Range(64, 4096);

}  // namespace

BENCHMARK_MAIN();
