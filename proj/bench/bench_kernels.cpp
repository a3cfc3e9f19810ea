// Serial reference vs OpenMP kernels on representative grid sizes.
//   bench_kernels --benchmark_filter=Projectors

#include <benchmark/benchmark.h>

#include "pawclock/kernels.hpp"
#include "pawclock/quadrature.hpp"

using namespace pawclock;

namespace {

std::vector<cplx> clock_params(int n) {
  std::vector<cplx> p;
  for (int i = 0; i < n; ++i) p.push_back(std::polar(1.2 * i / n, 0.61 * i));
  return p;
}

template <Mat (*Kernel)(const LieAlgebraRep&, const std::vector<cplx>&)>
void BM_CoherentColumns(benchmark::State& state) {
  const auto rep = build_su2_rep(static_cast<double>(state.range(0)));
  const auto params = clock_params(256);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(rep, params));
  state.SetItemsProcessed(state.iterations() * 256);
}

template <Mat (*Kernel)(const Mat&, const RealVec&)>
void BM_Projectors(benchmark::State& state) {
  const auto j = static_cast<double>(state.range(0));
  const int n = static_cast<int>(4 * j) + 4;
  const auto quad = coherent_quadrature(build_su2_rep(j), n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(quad.states, quad.weights));
  state.SetItemsProcessed(state.iterations() * quad.size());
}

template <Mat (*Kernel)(const Mat&, const Mat&, const Mat&)>
void BM_BetaGrid(benchmark::State& state) {
  const auto j = static_cast<double>(state.range(0));
  const int n = static_cast<int>(2 * j) + 2;
  const auto quad = coherent_quadrature(build_su2_rep(j), n, n, 1);
  const Mat amps = Mat::Identity(quad.states.rows(), quad.states.rows()) / std::sqrt(double(quad.states.rows()));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(quad.states, amps, quad.states));
  state.SetItemsProcessed(state.iterations() * quad.size() * quad.size());
}

}  // namespace

BENCHMARK(BM_CoherentColumns<kernels::serial::coherent_columns>)->Name("CoherentColumns/serial")->Arg(10)->Arg(20);
BENCHMARK(BM_CoherentColumns<kernels::omp::coherent_columns>)->Name("CoherentColumns/omp")->Arg(10)->Arg(20);
BENCHMARK(BM_Projectors<kernels::serial::accumulate_projectors>)->Name("Projectors/serial")->Arg(5)->Arg(20);
BENCHMARK(BM_Projectors<kernels::omp::accumulate_projectors>)->Name("Projectors/omp")->Arg(5)->Arg(20);
BENCHMARK(BM_BetaGrid<kernels::serial::beta_grid>)->Name("BetaGrid/serial")->Arg(5)->Arg(10);
BENCHMARK(BM_BetaGrid<kernels::omp::beta_grid>)->Name("BetaGrid/omp")->Arg(5)->Arg(10);

BENCHMARK_MAIN();
