#include <benchmark/benchmark.h>

#include <foursq/bundled.hpp>
#include <foursq/certlang.hpp>
#include <foursq/numthy.hpp>
#include <foursq/verify.hpp>

using namespace foursq;

static void BM_SeriesMul(benchmark::State &state)
{
    const auto order = static_cast<std::size_t>(state.range(0));
    const auto a = h_series(static_cast<long>(order), order);
    const auto b = invert(a);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul(a, b));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesMul)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);

static void BM_HSeries(benchmark::State &state)
{
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(h_series(static_cast<long>(order), order));
    }
}
BENCHMARK(BM_HSeries)->RangeMultiplier(2)->Range(64, 1024);

static void BM_Invert(benchmark::State &state)
{
    const auto order = static_cast<std::size_t>(state.range(0));
    const auto h = h_series(static_cast<long>(order), order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(invert(h));
    }
}
BENCHMARK(BM_Invert)->RangeMultiplier(2)->Range(64, 1024);

static void BM_SymbolicWZ(benchmark::State &state)
{
    const auto sets = load_certificates(bundled_certificate_text());
    const auto &c = sets.at(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_wz_symbolic(c));
    }
    state.SetLabel(c.name);
}
BENCHMARK(BM_SymbolicWZ)->Arg(0)->Arg(1);

static void BM_LemmaA(benchmark::State &state)
{
    const auto n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(l1(n, 101));
    }
}
BENCHMARK(BM_LemmaA)->Arg(5)->Arg(25);

static void BM_R4Table(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(r4_table(state.range(0)));
    }
}
BENCHMARK(BM_R4Table)->RangeMultiplier(4)->Range(500, 8000);
BENCHMARK_MAIN();
