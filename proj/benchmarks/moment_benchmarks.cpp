#include <benchmark/benchmark.h>

#include "monofock/clt_harness.hpp"

using namespace monofock;

namespace {

SignWord nested_word(int n)
{
    std::vector<int> signs(static_cast<std::size_t>(2 * n), -1);
    for (int i = n; i < 2 * n; ++i) {
        signs[static_cast<std::size_t>(i)] = 1;
    }
    return SignWord::from_ints(signs);
}

void BM_FiniteMoment(benchmark::State& state)
{
    const int N = static_cast<int>(state.range(0));
    std::vector<TestFunction> fs(8, TestFunction::indicator(0.0, 0.75));
    const MomentSpec spec(SignWord::parse("--+--+++"), fs);
    for (auto _ : state) {
        benchmark::DoNotOptimize(finite_moment(spec, N));
    }
    state.SetComplexityN(N);
}
BENCHMARK(BM_FiniteMoment)->RangeMultiplier(4)->Range(16, 16384)->Complexity(benchmark::oN);

void BM_FiniteMomentByMaps(benchmark::State& state)
{
    const int N = static_cast<int>(state.range(0));
    const auto spec = MomentSpec::unit_weights(SignWord::parse("--+-++"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(finite_moment_by_maps(spec, N));
    }
}
BENCHMARK(BM_FiniteMomentByMaps)->Arg(4)->Arg(8)->Arg(16);

void BM_ContinuousExact(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const SignWord w = nested_word(n);
    std::vector<TestFunction> fs(w.size(), TestFunction::piecewise({0.0, 0.25, 0.5, 1.0}, {1.0, -2.0, 0.5}));
    const MomentSpec spec(w, fs);
    for (auto _ : state) {
        benchmark::DoNotOptimize(continuous_moment_exact(spec));
    }
}
BENCHMARK(BM_ContinuousExact)->DenseRange(1, 6);

void BM_ContinuousMonteCarlo(benchmark::State& state)
{
    const auto spec = MomentSpec::unit_weights(SignWord::parse("--+-++"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(continuous_moment_mc(spec, state.range(0), 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ContinuousMonteCarlo)->Arg(1 << 14)->Arg(1 << 17);

void BM_EnumerateDyck(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_dyck_words(n));
    }
}
BENCHMARK(BM_EnumerateDyck)->DenseRange(4, 12, 2);

void BM_PositionSum(benchmark::State& state)
{
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(position_sum_moment(m, 256, Order::monotone));
    }
}
BENCHMARK(BM_PositionSum)->DenseRange(2, 10, 2);

void BM_ApplyWord(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const SignWord w = nested_word(n);
    std::vector<int> modes(w.size());
    for (int h = 0; h < n; ++h) {
        // Outer blocks get larger labels so the monotone moment is nonzero.
        modes[static_cast<std::size_t>(h)] = n - h;
        modes[static_cast<std::size_t>(2 * n - 1 - h)] = n - h;
    }
    const auto letters = make_letters(w, modes);
    for (auto _ : state) {
        benchmark::DoNotOptimize(vacuum_expectation_direct(letters, Order::monotone));
    }
}
BENCHMARK(BM_ApplyWord)->DenseRange(2, 12, 2);

} // namespace

BENCHMARK_MAIN();
