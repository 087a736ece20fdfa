#include <random>

#include <benchmark/benchmark.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "lagcap/chekanov.hpp"
#include "lagcap/cylinders.hpp"
#include "lagcap/dm_trees.hpp"
#include "lagcap/enumerative.hpp"
#include "lagcap/moduli_dims.hpp"
#include "lagcap/symplectic_index.hpp"

namespace {

using namespace lagcap;

SymplecticPath bench_path(int n, int samples) {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g(0.0, 1.2);
    Matrix s(2 * n, 2 * n);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) s(i, j) = g(rng);
    s = 0.5 * (s + s.transpose()).eval();
    const Matrix j0 = standard_j(n);
    return SymplecticPath::sample(n, [&](double t) -> Matrix { return (j0 * s * t).exp(); }, samples);
}

void bm_robbin_salamon(benchmark::State& state) {
    const auto path = bench_path(static_cast<int>(state.range(0)), 161);
    for (auto _ : state) benchmark::DoNotOptimize(robbin_salamon(path));
}
BENCHMARK(bm_robbin_salamon)->Arg(1)->Arg(2)->Arg(3);

void bm_bezout(benchmark::State& state) {
    const std::vector<double> a(static_cast<std::size_t>(state.range(0)) + 1, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(count_projective_intersections(a));
}
BENCHMARK(bm_bezout)->Arg(2)->Arg(3);

void bm_tangency(benchmark::State& state) {
    const std::vector<double> a{0.7, 1.9, 3.1, 4.3};
    for (auto _ : state) benchmark::DoNotOptimize(count_tangency_lines(4, a));
}
BENCHMARK(bm_tangency);

void bm_audin(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(audin_distributions(static_cast<int>(state.range(0)), false));
}
BENCHMARK(bm_audin)->Arg(6)->Arg(12);

void bm_chekanov(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(splitting_configurations());
}
BENCHMARK(bm_chekanov);

void bm_stable_trees(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_stable_trees(static_cast<int>(state.range(0))));
}
BENCHMARK(bm_stable_trees)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void bm_cylinder(benchmark::State& state) {
    Eigen::VectorXd q(2), p(2);
    q << 0.3, 1.1;
    p << 0.0, 2.5;
    const auto rho = RhoProfile::blended();
    const int grid = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto sol = integrate_orbit_cylinder(2, 3, q, p, rho, 2.0, {grid, grid});
        benchmark::DoNotOptimize(holomorphic_residual(sol, rho));
    }
}
BENCHMARK(bm_cylinder)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
