// Microbenchmarks for the hot paths: matrix assembly, exact eigenvalue
// products, geometry primitives, the Dirichlet solver, and degree dynamics.

#include <lorentzlab/exotic.hpp>
#include <lorentzlab/experiments.hpp>
#include <lorentzlab/harmonic.hpp>
#include <lorentzlab/lorentz.hpp>
#include <lorentzlab/mobius.hpp>
#include <lorentzlab/picard_manin.hpp>
#include <lorentzlab/principal_series.hpp>

#include <benchmark/benchmark.h>

using namespace lorentzlab;

namespace {

void BM_RepMatrix(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  const MobiusElement g = g_t(0.2);
  for (auto _ : state) benchmark::DoNotOptimize(rep_matrix(1.0, g, K, 16 * K));
  state.SetComplexityN(K);
}
BENCHMARK(BM_RepMatrix)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Complexity();

void BM_IntertwineResidual(benchmark::State& state) {
  const MobiusElement g = g_t(0.2);
  for (auto _ : state) benchmark::DoNotOptimize(intertwine_residual(1.0, g, 24, 384));
}
BENCHMARK(BM_IntertwineResidual);

void BM_LambdaProduct(benchmark::State& state) {
  const Rational s(3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(lambda_product(s, 200));
}
BENCHMARK(BM_LambdaProduct);

void BM_UstIntegral(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(u_st(0.75, 0.3, 2048));
}
BENCHMARK(BM_UstIntegral);

void BM_ExpLogRoundtrip(benchmark::State& state) {
  const HPoint x = base_vertex(3);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(4);
  v[1] = 0.4;
  v[2] = -0.2;
  const HPoint y = exp_map(x, v);
  for (auto _ : state) benchmark::DoNotOptimize(log_map(x, y));
}
BENCHMARK(BM_ExpLogRoundtrip);

void BM_HarmonicSolve(benchmark::State& state) {
  const int rings = static_cast<int>(state.range(0));
  const DiscMesh mesh = build_disc_mesh(rings, 2 * rings, WeightScheme::Uniform);
  const std::vector<HPoint> bv = geodesic_boundary_values(mesh, 2, 0.4);
  SolveOptions opts;
  opts.tol = 1e-6;
  opts.max_iter = 20000;
  for (auto _ : state) benchmark::DoNotOptimize(solve_dirichlet(mesh, bv, opts));
}
BENCHMARK(BM_HarmonicSolve)->Arg(3)->Arg(5);

void BM_DegreeSequence(benchmark::State& state) {
  const CremonaWord w{MonomialGen{2, 1, 1, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(degree_sequence(w, 40));
}
BENCHMARK(BM_DegreeSequence);

}  // namespace

BENCHMARK_MAIN();
