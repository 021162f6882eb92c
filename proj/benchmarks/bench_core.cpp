#include <benchmark/benchmark.h>

#include "blockivp/analysis.hpp"
#include "blockivp/diffmat.hpp"
#include "blockivp/problems.hpp"
#include "blockivp/solver.hpp"

namespace {

using namespace blockivp;

void BM_DifferentiationMatrices(benchmark::State& state) {
    const NodeSet nodes = equispaced_nodes(0.0, 1.0, static_cast<int>(state.range(0)) + 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(differentiation_matrices(nodes));
    }
}
BENCHMARK(BM_DifferentiationMatrices)->Arg(3)->Arg(5)->Arg(10);

void BM_ShiftedSpectrum(benchmark::State& state) {
    const DiffMatrices dm = differentiation_matrices(
        equispaced_nodes(0.0, 1.0, static_cast<int>(state.range(0)) + 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(shifted_spectrum(dm));
    }
}
BENCHMARK(BM_ShiftedSpectrum)->Arg(5)->Arg(8);

void BM_LinearBlockSolve(benchmark::State& state) {
    const DiffMatrices dm = differentiation_matrices(equispaced_nodes(0.0, 0.02, 6));
    Eigen::MatrixXd a(1, 1);
    a(0, 0) = -100.0;
    Eigen::VectorXd alpha(1);
    alpha(0) = 1.0;
    const TimeFn phi = [](double) {
        Eigen::VectorXd v(1);
        v(0) = 10.0;
        return v;
    };
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_block_linear(dm, a, phi, alpha));
    }
}
BENCHMARK(BM_LinearBlockSolve);

void BM_NewtonBlockSolve(benchmark::State& state) {
    const auto entry = problems::get("example3");
    const DiffMatrices dm = differentiation_matrices(equispaced_nodes(0.0, 0.2, 6));
    Eigen::VectorXd alpha(1);
    alpha(0) = -1.0;
    const SolverConfig config;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_block_newton(dm, entry.problem, alpha, config));
    }
}
BENCHMARK(BM_NewtonBlockSolve);

void BM_MarchStiffLinear(benchmark::State& state) {
    const auto entry = problems::get("example1");
    SolverConfig config;
    config.points_per_block = 5;
    config.block_count = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(march(entry.problem, config));
    }
}
BENCHMARK(BM_MarchStiffLinear)->Arg(10)->Arg(100);

void BM_MarchNonlinearSystem(benchmark::State& state) {
    const auto entry = problems::get("example5");
    SolverConfig config;
    config.points_per_block = 5;
    config.block_count = 4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(march(entry.problem, config));
    }
}
BENCHMARK(BM_MarchNonlinearSystem);

void BM_Rk4Reference(benchmark::State& state) {
    const auto entry = problems::get("example5");
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            rk4_reference(entry.problem, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_Rk4Reference)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
