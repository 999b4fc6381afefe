#include <benchmark/benchmark.h>

#include "polyineq/bernstein.hpp"
#include "polyineq/chebyshev.hpp"
#include "polyineq/geometry.hpp"
#include "polyineq/lp.hpp"
#include "polyineq/oracle.hpp"

namespace {

using namespace polyineq;

void BM_cheb_eval(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    double x = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cheb_eval(n, x));
        x += 1e-9;
    }
}
BENCHMARK(BM_cheb_eval)->Arg(8)->Arg(64);

void BM_alpha_triangle(benchmark::State& state) {
    const ConvexBody K = make_simplex(2);
    const Vec x{0.21, 0.37};
    const Config cfg;
    for (auto _ : state) benchmark::DoNotOptimize(alpha(K, x, cfg).alpha);
}
BENCHMARK(BM_alpha_triangle);

void BM_alpha_sweep_pentagon(benchmark::State& state) {
    const ConvexBody K = make_vpolytope(
        {{1.0, 0.0}, {0.31, 0.95}, {-0.81, 0.59}, {-0.81, -0.59}, {0.31, -0.95}});
    const Vec x{0.2, 0.1};
    const Config cfg;
    for (auto _ : state) benchmark::DoNotOptimize(alpha(K, x, cfg).alpha);
}
BENCHMARK(BM_alpha_sweep_pentagon);

void BM_lp_solve(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    DenseMatrix A(m, 4);
    std::vector<double> b(m), c{1.0, 1.0, 1.0, 1.0};
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < 4; ++j) A(i, j) = std::cos(0.7 * i + 1.3 * j);
        b[i] = 2.0 + std::sin(0.3 * i);
    }
    for (auto _ : state) benchmark::DoNotOptimize(lp_solve(A, b, c, LPSense::maximize));
}
BENCHMARK(BM_lp_solve)->Arg(64)->Arg(512);

void BM_best_ellipse_triangle(benchmark::State& state) {
    const ConvexBody K = make_simplex(2);
    const Vec x{1.0 / 3, 1.0 / 3}, y{1.0, 0.0};
    const Config cfg;
    for (auto _ : state) benchmark::DoNotOptimize(best_ellipse(K, x, y, cfg).E);
}
BENCHMARK(BM_best_ellipse_triangle);

void BM_chebyshev_oracle(benchmark::State& state) {
    const ConvexBody K = make_simplex(1);
    const Config cfg;
    const GridSpec grid = make_grid(K, 41, cfg);
    const Vec x{2.0};
    for (auto _ : state) benchmark::DoNotOptimize(chebyshev_oracle(K, x, 4, grid).first);
}
BENCHMARK(BM_chebyshev_oracle);

}  // namespace

BENCHMARK_MAIN();
