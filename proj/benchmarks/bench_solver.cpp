#include <benchmark/benchmark.h>

#include "extrobin/bessel.hpp"
#include "extrobin/geometry.hpp"
#include "extrobin/shooting.hpp"
#include "extrobin/variational.hpp"

namespace {

using extrobin::ProblemParams;

void BM_SolveP2N3(benchmark::State& state) {
    const ProblemParams params{2.0, 3, -static_cast<double>(state.range(0)), 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(extrobin::solve_lambda1_ball(params).lambda1);
    }
}
BENCHMARK(BM_SolveP2N3)->Arg(2)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_SolveP3N2(benchmark::State& state) {
    const ProblemParams params{3.0, 2, -static_cast<double>(state.range(0)), 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(extrobin::solve_lambda1_ball(params).lambda1);
    }
}
BENCHMARK(BM_SolveP3N2)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_BesselK(benchmark::State& state) {
    double x = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(extrobin::bessel_k_scaled(1.0, x));
        x = x < 50.0 ? x * 1.1 : 0.5;
    }
}
BENCHMARK(BM_BesselK);

void BM_BallP2Bessel(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(extrobin::lambda1_ball_p2(2, 1.0, -1.0));
    }
}
BENCHMARK(BM_BallP2Bessel);

void BM_Truncated(benchmark::State& state) {
    const ProblemParams params{2.0, 3, -2.0, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            extrobin::minimize_truncated(params, 30.0, static_cast<int>(state.range(0)), 1e-12)
                .lambda);
    }
}
BENCHMARK(BM_Truncated)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_PacQuotient(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(extrobin::pac_quotient({2.0, 0.5}, -1.0).quotient);
    }
}
BENCHMARK(BM_PacQuotient)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
