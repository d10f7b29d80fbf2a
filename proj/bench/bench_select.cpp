// Wall-clock comparison of the selection routines, and of serial against
// OpenMP execution of a small experiment.

#include <algorithm>
#include <vector>

#include <benchmark/benchmark.h>

#include "frselect/harness.hpp"

using namespace frselect;

namespace {

std::vector<double> input(InputKind kind, std::int64_t n) {
    const auto ints = generate(InputSpec{kind, n, 1});
    return {ints.begin(), ints.end()};
}

template <class Fn>
void run_selection(benchmark::State& state, InputKind kind, Fn fn) {
    const auto n = static_cast<std::int64_t>(state.range(0));
    const std::vector<double> base = input(kind, n);
    std::vector<double> x;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        state.PauseTiming();
        x = base;
        state.ResumeTiming();
        fn(x, (n + 1) / 2, seed++);
        benchmark::DoNotOptimize(x.data());
    }
    state.SetItemsProcessed(state.iterations() * n);
}

void BM_select(benchmark::State& state) {
    run_selection(state, InputKind::Random, [](std::vector<double>& x, Index k, std::uint64_t seed) {
        select(std::span<double>(x), k, SelectConfig{}, seed);
    });
}

void BM_pmselect(benchmark::State& state) {
    run_selection(state, InputKind::Random, [](std::vector<double>& x, Index k, std::uint64_t seed) {
        pmselect(std::span<double>(x), k, SelectConfig{}, seed);
    });
}

void BM_riselect(benchmark::State& state) {
    run_selection(state, InputKind::Random, [](std::vector<double>& x, Index k, std::uint64_t seed) {
        riselect(std::span<double>(x), k, RiConfig{}, seed);
    });
}

void BM_nth_element(benchmark::State& state) {
    run_selection(state, InputKind::Random, [](std::vector<double>& x, Index k, std::uint64_t) {
        std::nth_element(x.begin(), x.begin() + (k - 1), x.end());
    });
}

void BM_select_onezero(benchmark::State& state) {
    run_selection(state, InputKind::OneZero, [](std::vector<double>& x, Index k, std::uint64_t seed) {
        select(std::span<double>(x), k, SelectConfig{}, seed);
    });
}

void BM_experiment(benchmark::State& state) {
    ExperimentConfig cfg;
    cfg.sizes = {100'000, 200'000};
    cfg.runs_per_size = 8;
    cfg.parallel = state.range(0) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(run_experiment(cfg).rows.size());
}

}  // namespace

BENCHMARK(BM_select)->RangeMultiplier(10)->Range(10'000, 1'000'000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_pmselect)->RangeMultiplier(10)->Range(10'000, 1'000'000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_riselect)->RangeMultiplier(10)->Range(10'000, 1'000'000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_nth_element)->RangeMultiplier(10)->Range(10'000, 1'000'000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_select_onezero)->Arg(1'000'000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_experiment)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
