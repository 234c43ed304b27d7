#include <benchmark/benchmark.h>

#include <numbers>
#include <random>
#include <vector>

#include "fliptoep/grids.hpp"
#include "fliptoep/krylov.hpp"
#include "fliptoep/linalg.hpp"
#include "fliptoep/matgen.hpp"
#include "fliptoep/spectra.hpp"
#include "fliptoep/symbol.hpp"

using namespace fliptoep;

namespace {
const char* kFIgA = "2/3 - 1/4*cos(t) - 2/5*cos(2*t) - 1/60*cos(3*t)";
const char* kFc = "1 on [0,pi/2); t + 1 - pi/2 on [pi/2,pi]";
}  // namespace

static void BM_parse_symbol(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse_symbol(kFIgA));
}
BENCHMARK(BM_parse_symbol);

static void BM_fourier_coeffs_piecewise(benchmark::State& state) {
  const SymbolSpec spec = parse_symbol(kFc);
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fourier_coeffs(spec, K, 1e-9));
  state.SetComplexityN(K);
}
BENCHMARK(BM_fourier_coeffs_piecewise)->Arg(32)->Arg(128)->Complexity();

static void BM_toeplitz_build(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FourierCoeffs c = fourier_coeffs(parse_symbol(kFIgA), n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(toeplitz(c, n));
}
BENCHMARK(BM_toeplitz_build)->Arg(256)->Arg(1024);

static void BM_split_eigendecompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ToeplitzMatrix t = toeplitz(fourier_coeffs(parse_symbol(kFIgA), n - 1), n);
  for (auto _ : state) benchmark::DoNotOptimize(split_eigendecompose(t));
  state.SetComplexityN(n);
}
BENCHMARK(BM_split_eigendecompose)->Arg(128)->Arg(256)->Arg(512)->Complexity(benchmark::oNCubed);

static void BM_eig_flipped(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FlippedMatrix h = flipped(toeplitz(fourier_coeffs(parse_symbol(kFIgA), n - 1), n));
  for (auto _ : state) benchmark::DoNotOptimize(eig_flipped(h));
}
BENCHMARK(BM_eig_flipped)->Arg(128)->Arg(256)->Arg(512);

static void BM_svd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = coef(rng);
  for (auto _ : state) benchmark::DoNotOptimize(svd(a));
}
BENCHMARK(BM_svd)->Arg(64)->Arg(128)->Arg(256);

static void BM_exact_grid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SymbolSpec spec = parse_symbol(kFIgA);
  const RangeInfo info = range_info(spec);
  const SpectralPairing p = split_eigendecompose(toeplitz(fourier_coeffs(spec, n - 1), n));
  for (auto _ : state) benchmark::DoNotOptimize(exact_grid(p, spec, &info));
}
BENCHMARK(BM_exact_grid)->Arg(128)->Arg(512);

static void BM_flip_solve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  FourierCoeffs c;  // f = 2 + e^{it}
  c.k_min = -1;
  c.k_max = 1;
  c.values = {{0.0, 0.0}, {2.0, 0.0}, {1.0, 0.0}};
  c.trig_degree = 1;
  const ToeplitzMatrix t = toeplitz(c, n);
  const std::vector<double> b(static_cast<size_t>(n), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(flip_solve(t, b, 1e-9));
}
BENCHMARK(BM_flip_solve)->Arg(128)->Arg(512);

BENCHMARK_MAIN();
