#include <benchmark/benchmark.h>

#include <random>

#include "ltpss/operators.hpp"
#include "ltpss/solver.hpp"

using namespace ltpss;

namespace {

Matrix random_pi(int n, double scale) {
    std::mt19937 rng(42 + static_cast<unsigned>(n));
    std::normal_distribution<double> dist(0.0, scale);
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = dist(rng);
    }
    return m;
}

void bm_svd(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const Matrix m = random_pi(n, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(svd(m));
    }
}

void bm_composed_map(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const auto ctx = OperatorContext::make(random_pi(n, 0.001), 100.0, 0.001);
    const Matrix l = random_pi(n, 0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(composed_T(l, ctx));
    }
}

void bm_solve(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const Matrix pi_hat = random_pi(n, 0.002 / std::sqrt(static_cast<double>(n)));
    SolverParams params;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(pi_hat, params));
    }
}

BENCHMARK(bm_svd)->Arg(5)->Arg(25)->Arg(100);
BENCHMARK(bm_composed_map)->Arg(5)->Arg(25)->Arg(100);
BENCHMARK(bm_solve)->Arg(5)->Arg(25)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
