#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "fliptoep/errors.hpp"
#include "fliptoep/grids.hpp"
#include "fliptoep/matgen.hpp"
#include "fliptoep/spectra.hpp"
#include "fliptoep/symbol.hpp"
#include "oracles.hpp"

using namespace fliptoep;
namespace {
constexpr double kPi = std::numbers::pi;
const char* kFIgA = "2/3 - 1/4*cos(t) - 2/5*cos(2*t) - 1/60*cos(3*t)";
const char* kFc = "1 on [0,pi/2); t + 1 - pi/2 on [pi/2,pi]";
const char* kFd = "cos(2*t) + cos(3*t) on [0,pi/2); t on [pi/2,pi]";
}  // namespace

TEST_CASE("uniformity_measure: definition arithmetic") {
  const Grid u = uniform_grid(16, 0.0, kPi);
  CHECK(u.m <= 1e-15);
  const std::vector<double> single{kPi / 4.0};
  CHECK(uniformity_measure(single, 0.0, kPi) == doctest::Approx(kPi / 4.0).epsilon(1e-15));
  CHECK_THROWS_AS(uniformity_measure({}, 0.0, kPi), std::invalid_argument);
  // Stored measure matches a recomputation.
  std::vector<double> pts{0.3, 1.1, 2.9};
  const Grid g = make_grid(pts, 0.0, kPi);
  CHECK(std::abs(g.m - uniformity_measure(g.points, 0.0, kPi)) <= 1e-14);
}

TEST_CASE("sorted_sup_match: examples and the exhaustive oracle") {
  const std::vector<double> a{1.0, 3.0, 2.0};
  const std::vector<double> b{2.1, 0.9, 3.2};
  const SupMatch m = sorted_sup_match(a, b);
  CHECK(m.max_dev == doctest::Approx(0.2).epsilon(1e-15));
  // Realizing permutation pairs by rank.
  for (size_t i = 0; i < a.size(); ++i)
    CHECK(std::abs(a[i] - b[static_cast<size_t>(m.perm[i])]) <= m.max_dev + 1e-15);

  CHECK(sorted_sup_match(a, a).max_dev == 0.0);
  CHECK_THROWS_AS(sorted_sup_match(a, std::vector<double>{1.0}), std::invalid_argument);

  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> val(-5.0, 5.0);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> x(6), y(6);
    for (auto& v : x) v = val(rng);
    for (auto& v : y) v = val(rng);
    const double ours = sorted_sup_match(x, y).max_dev;
    CHECK(ours == doctest::Approx(oracle::brute_force_sup_match(x, y)).epsilon(1e-14));
  }
}

TEST_CASE("match_Mn: Example-e2 value at n=8 and the exact tridiagonal case") {
  const SymbolSpec fc = parse_symbol(kFc);
  const FourierCoeffs c = fourier_coeffs(fc, 7);
  const SpectralPairing p = split_eigendecompose(toeplitz(c, 8));
  const MatchReport rep = match_Mn(p, fc, uniform_grid(8, 0.0, kPi));
  CHECK(rep.Mn == doctest::Approx(0.0851).epsilon(0.02));  // reference table value, 4 digits
  // Parity preservation of the applied ordering.
  for (int i = 0; i < rep.n; ++i) CHECK(rep.ordering[static_cast<size_t>(i)] % 2 == i % 2);

  const SymbolSpec cos2 = parse_symbol("2*cos(t)");
  const SpectralPairing p32 = split_eigendecompose(toeplitz(fourier_coeffs(cos2, 31), 32));
  const MatchReport r32 = match_Mn(p32, cos2, uniform_grid(32, 0.0, kPi));
  CHECK(r32.Mn <= 1e-12);

  CHECK_THROWS_AS(match_Mn(p32, cos2, uniform_grid(8, 0.0, kPi)), std::invalid_argument);
  CHECK_THROWS_AS(match_Mn(p32, parse_symbol("2 + exp(i*1*t)", Extension::none),
                           uniform_grid(32, 0.0, kPi)),
                  std::invalid_argument);
}

TEST_CASE("match_Mn decreases along the Example-e2 sweep") {
  const SymbolSpec fc = parse_symbol(kFc);
  const FourierCoeffs c = fourier_coeffs(fc, 127, 1e-10);
  double prev = 1e9;
  for (int n : {8, 16, 32, 64, 128}) {
    const SpectralPairing p = split_eigendecompose(toeplitz(c, n));
    const MatchReport rep = match_Mn(p, fc, uniform_grid(n, 0.0, kPi));
    CHECK(rep.Mn < prev);
    prev = rep.Mn;
  }
}

TEST_CASE("exact_grid: 2cos(t) recovers the uniform grid exactly") {
  const SymbolSpec s = parse_symbol("2*cos(t)");
  const FourierCoeffs c = fourier_coeffs(s, 15);
  const SpectralPairing p = split_eigendecompose(toeplitz(c, 16));
  const ExactGridResult eg = exact_grid(p, s);
  for (int i = 0; i < 16; ++i)
    CHECK(std::abs(eg.grid.points[static_cast<size_t>(i)] - (i + 1) * kPi / 17.0) <= 1e-12);
  CHECK(eg.grid.m <= 1e-12);
  CHECK(eg.report.Mn <= 1e-12);
}

TEST_CASE("exact_grid: reference values at n=8 within the assignment slack") {
  const SymbolSpec figa = parse_symbol(kFIgA);
  const SpectralPairing p8 = split_eigendecompose(toeplitz(fourier_coeffs(figa, 7), 8));
  const ExactGridResult eg8 = exact_grid(p8, figa);
  CHECK(eg8.grid.m >= 0.2475 / 2.0);
  CHECK(eg8.grid.m <= 0.2475 * 2.0);
  CHECK(eg8.grid.m == doctest::Approx(0.247548).epsilon(1e-3));  // regression

  const SymbolSpec fd = parse_symbol(kFd);
  const SpectralPairing pd = split_eigendecompose(toeplitz(fourier_coeffs(fd, 7), 8));
  const ExactGridResult egd = exact_grid(pd, fd);
  CHECK(egd.grid.m >= 0.5771 / 2.0);
  CHECK(egd.grid.m <= 0.5771 * 2.0);
  CHECK(egd.grid.m == doctest::Approx(0.577071).epsilon(1e-3));  // regression
}

TEST_CASE("exact_grid: deviations meet the preimage tolerance and parity is kept") {
  const SymbolSpec figa = parse_symbol(kFIgA);
  const RangeInfo ri = range_info(figa);
  for (int n : {8, 16, 33}) {
    const SpectralPairing p = split_eigendecompose(toeplitz(fourier_coeffs(figa, n - 1), n));
    const ExactGridResult eg = exact_grid(p, figa, &ri);
    double scale = 1.0;
    for (const auto& r : p.records) scale = std::max(scale, std::abs(r.lamT));
    CHECK(eg.report.Mn <= 1e-10 * scale);
    for (int i = 0; i < n; ++i) CHECK(eg.report.ordering[static_cast<size_t>(i)] % 2 == i % 2);
    for (double x : eg.grid.points) {
      CHECK(x >= 0.0);
      CHECK(x <= kPi);
    }
  }
}

TEST_CASE("exact_grid: Example e2 returns a (non-a.u.) grid with tiny deviations") {
  // All eigenvalues live strictly above the flat piece's value, so they are
  // recovered on the increasing piece and the grid crowds into [pi/2, pi].
  const SymbolSpec fc = parse_symbol(kFc);
  const FourierCoeffs c = fourier_coeffs(fc, 31);
  const SpectralPairing p = split_eigendecompose(toeplitz(c, 32));
  const ExactGridResult eg = exact_grid(p, fc);
  double scale = 1.0;
  for (const auto& r : p.records) scale = std::max(scale, std::abs(r.lamT));
  CHECK(eg.report.Mn <= 1e-10 * scale);
  CHECK(eg.grid.m > 0.3);  // far from uniform, as the flat piece forces
}

TEST_CASE("exact_grid rejects non-even symbols") {
  const SymbolSpec s = parse_symbol("2*cos(t)");
  const SpectralPairing p = split_eigendecompose(toeplitz(fourier_coeffs(s, 7), 8));
  CHECK_THROWS_AS(exact_grid(p, parse_symbol("2 + exp(i*1*t)", Extension::none)),
                  std::invalid_argument);
}

TEST_CASE("exact_grid reports an eigenvalue with no preimage") {
  // A forged pairing whose value lies far outside f([0,pi]).
  const SymbolSpec s = parse_symbol("2*cos(t)");
  SpectralPairing p;
  p.n = 1;
  p.records = {{1, 99.0, 99.0, SymClass::symmetric}};
  CHECK_THROWS_AS(exact_grid(p, s), NumericError);
}
