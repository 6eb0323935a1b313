#include <gkz/gkz.hpp>

#include <benchmark/benchmark.h>

using namespace gkz;

namespace {

LatticeConfig polynomial() { return build_config(PointConfig{2, {{1, 0}, {1, 2}, {1, 1}}}); }

LatticeConfig gauss() { return build_config(gauss_points()); }

void BM_CoefficientM(benchmark::State &state) {
    const auto l = state.range(0);
    const Rational v(1, 3);
    for (auto _ : state)
        for (std::int64_t s = 0; s <= 3; ++s)
            benchmark::DoNotOptimize(coefficient_M(l, s, v));
}
BENCHMARK(BM_CoefficientM)->Arg(-16)->Arg(4)->Arg(16)->Arg(64);

void BM_PhiSeriesGolden(benchmark::State &state) {
    const auto c = polynomial();
    const RatVector v{2, 0, 8};
    const IntVector lift(3, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(phi_series(c, v, lift, {0, 0, 0}, {-10, 20}));
}
BENCHMARK(BM_PhiSeriesGolden);

void BM_PhiSeriesGauss(benchmark::State &state) {
    const auto c = gauss();
    const RatVector v{0, Rational(-4, 5), Rational(-1, 2), Rational(-1, 3)};
    const IntVector lift(4, 0);
    const auto hi = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(phi_series(c, v, lift, {0, 0, 0, 0}, {0, hi}));
}
BENCHMARK(BM_PhiSeriesGauss)->Arg(10)->Arg(40)->Arg(160);

void BM_LogSolutionGauss(benchmark::State &state) {
    const auto c = gauss();
    const RatVector v{0, 1, Rational(-1, 2), Rational(-1, 3)};
    const IntVector lift(4, 0);
    const auto hi = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(log_solution(c, v, lift, 1, {-2, hi}));
}
BENCHMARK(BM_LogSolutionGauss)->Arg(10)->Arg(40);

void BM_LogSolutionThreeFold(benchmark::State &state) {
    // (1,0,0), (0,1,0), (0,0,1), (-1,-1,-1): relation (1,1,1,1), m = 4 at beta = 0.
    const auto c = build_config(PointConfig{3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}});
    const RatVector v(4, 0);
    const IntVector lift(4, 0);
    const auto r = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(log_solution(c, v, lift, r, {0, 12}));
}
BENCHMARK(BM_LogSolutionThreeFold)->DenseRange(0, 3);

void BM_CertifyGauss(benchmark::State &state) {
    const auto c = gauss();
    const Rational t1(1, 2), t2(1, 3);
    const auto s = log_solution(c, RatVector{0, 1, -t1, -t2}, IntVector(4, 0), 1, {-2, 30});
    const auto beta = gauss_parameter(t1, t2, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(certify(c, beta, s));
}
BENCHMARK(BM_CertifyGauss);

void BM_SolutionBundle(benchmark::State &state) {
    const auto c = polynomial();
    const auto beta = Parameter::make(c, RatVector{10, 8});
    BundleOptions options;
    options.window = {-10, 20};
    const IntVector lift(3, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(solution_bundle(c, beta, lift, options));
}
BENCHMARK(BM_SolutionBundle);

} // namespace
BENCHMARK_MAIN();
