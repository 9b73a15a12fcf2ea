#include <benchmark/benchmark.h>

#include "cardinal/generating_functions.hpp"
#include "cardinal/registry.hpp"

namespace {

void BM_BsplineSegment(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(cardinal::bspline_segment(n, n / 2));
}
BENCHMARK(BM_BsplineSegment)->Arg(5)->Arg(10)->Arg(20);

void BM_EulerianRow(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(cardinal::eulerian_row(n));
}
BENCHMARK(BM_EulerianRow)->Arg(8)->Arg(16);

void BM_ApostolBernoulliPoly(benchmark::State& state) {
    const long n = state.range(0);
    const auto method = static_cast<cardinal::AbMethod>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(cardinal::apostol_bernoulli_poly(n, method));
}
BENCHMARK(BM_ApostolBernoulliPoly)
    ->Args({8, 0})
    ->Args({8, 1})
    ->Args({8, 2})
    ->Args({8, 3});

void BM_GfApostolBernoulliPolys(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cardinal::gf_apostol_bernoulli_polys(order));
}
BENCHMARK(BM_GfApostolBernoulliPolys)->Arg(6)->Arg(10);

void BM_VolkenbornTruncated(benchmark::State& state) {
    const cardinal::PolyQ f =
        cardinal::PolyQ::monomial(cardinal::Rational(1), 4, cardinal::Sym::omega);
    const long m = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(cardinal::volkenborn_truncated(f, 3, m));
}
BENCHMARK(BM_VolkenbornTruncated)->Arg(4)->Arg(8);

void BM_SuiteCase(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cardinal::run_suite("five-route", 8));
}
BENCHMARK(BM_SuiteCase);

} // namespace

BENCHMARK_MAIN();
