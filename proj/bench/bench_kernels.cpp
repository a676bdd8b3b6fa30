// Serial reference against the OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include <random>

#include "vatwist/groups/catalog.hpp"
#include "vatwist/reps/decompose.hpp"
#include "vatwist/reps/mackey.hpp"

using namespace vatwist;

namespace {

kernels::Exec exec_of(const benchmark::State& s) {
  return s.range(0) ? kernels::Exec::Parallel : kernels::Exec::Serial;
}

GroupRep regular_rep(const FinGroup& Q) {
  const std::size_t n = Q.order();
  GroupRep pi;
  pi.dim = n;
  pi.perm.assign(n, std::vector<int>(n));
  pi.phase.assign(n, std::vector<Complex>(n, 1.0));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t x = 0; x < n; ++x) pi.perm[g][x] = Q.mul(static_cast<int>(g), static_cast<int>(x));
  return pi;
}

void BM_AverageCommutant(benchmark::State& state) {
  const FiniteQuotient fq(catalog::quarter_turn_semidirect(), 5);
  const GroupRep pi = regular_rep(fq.group());
  std::mt19937_64 rng(1);
  std::normal_distribution<double> nd;
  CMatrix X(pi.dim, pi.dim);
  for (Eigen::Index i = 0; i < X.rows(); ++i)
    for (Eigen::Index j = 0; j < X.cols(); ++j) X(i, j) = Complex(nd(rng), nd(rng));
  X = (X + X.adjoint()).eval();
  for (auto _ : state) benchmark::DoNotOptimize(average_commutant(pi, X, exec_of(state)));
}
BENCHMARK(BM_AverageCommutant)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FiniteIrreps(benchmark::State& state) {
  const FiniteQuotient fq(catalog::quarter_turn_semidirect(), 4);
  DecomposeOptions opt;
  opt.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(finite_irreps(fq.group(), opt));
}
BENCHMARK(BM_FiniteIrreps)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_OrbitCrossSection(benchmark::State& state) {
  const VAGroup G = catalog::quarter_turn_semidirect();
  for (auto _ : state) benchmark::DoNotOptimize(orbit_cross_section(G, 60, exec_of(state)));
}
BENCHMARK(BM_OrbitCrossSection)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MackeyDimensions(benchmark::State& state) {
  const VAGroup G = catalog::inversion_semidirect();
  DecomposeOptions opt;
  opt.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(mackey_dimensions(G, 7, opt));
}
BENCHMARK(BM_MackeyDimensions)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
