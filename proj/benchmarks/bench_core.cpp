#include <benchmark/benchmark.h>

#include "diraccs/coherent.hpp"
#include "diraccs/fock.hpp"
#include "diraccs/matrix_ops.hpp"
#include "diraccs/observables.hpp"
#include "diraccs/special_fn.hpp"
#include "diraccs/verify.hpp"

using namespace diraccs;

static void BM_Hyp0F1(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(special::hyp0f1(3.0, x));
}
BENCHMARK(BM_Hyp0F1)->Arg(1)->Arg(25)->Arg(400);

static void BM_BesselK(benchmark::State& state) {
  const double x = state.range(0) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(special::bessel_k(3, x));
}
BENCHMARK(BM_BesselK)->Arg(1)->Arg(20)->Arg(300);

static void BM_PsiDiagonal(benchmark::State& state) {
  const ModelParams p(1.0, 0.5);
  const auto ep = to_elliptic(p, {1.3, -0.7});
  const int k_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fock::psi_diagonal(p, 2, k_max, ep));
}
BENCHMARK(BM_PsiDiagonal)->Arg(16)->Arg(64)->Arg(256);

static void BM_CS2DAmplitude(benchmark::State& state) {
  const ModelParams p(1.0, 0.5);
  const coherent::CS2DSpec s{cplx(2.0, 0.0), 5.0};
  for (auto _ : state) benchmark::DoNotOptimize(coherent::cs2d_amplitude(p, s, {8.0, 1.5}));
}
BENCHMARK(BM_CS2DAmplitude);

static void BM_SU11Amplitude(benchmark::State& state) {
  const ModelParams p(1.0, 1.0);
  const coherent::SU11Spec s{static_cast<double>(state.range(0)), 1};
  for (auto _ : state) benchmark::DoNotOptimize(coherent::su11_amplitude(p, s, {2.0, 1.0}));
}
BENCHMARK(BM_SU11Amplitude)->Arg(1)->Arg(5);

static void BM_DensityGrid(benchmark::State& state) {
  const ModelParams p(1.0, 0.5);
  const coherent::CS2DSpec s{cplx(2.0, 0.0), 5.0};
  const int n = static_cast<int>(state.range(0));
  const observables::GridSpec g{-2.0, 16.0, n, -10.0, 10.0, n};
  observables::DensityOptions opt;
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(observables::density_grid(p, s, g, {}, opt));
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_DensityGrid)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_MatrixAlgebra(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(matrix_ops::verify_matrix_algebra(cutoff, {}));
}
BENCHMARK(BM_MatrixAlgebra)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_ScalarAlgebra(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fock::check_scalar_algebra(30));
}
BENCHMARK(BM_ScalarAlgebra)->Unit(benchmark::kMillisecond);

static void BM_ResolutionOfIdentity(benchmark::State& state) {
  const auto block = verify::square_block(6);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify::resolution_of_identity(verify::CompletenessKind::two_d, block));
}
BENCHMARK(BM_ResolutionOfIdentity)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
