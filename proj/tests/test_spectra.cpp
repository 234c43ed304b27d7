#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "fliptoep/errors.hpp"
#include "fliptoep/matgen.hpp"
#include "fliptoep/spectra.hpp"
#include "fliptoep/symbol.hpp"
#include "oracles.hpp"

using namespace fliptoep;
namespace {
const char* kFIgA = "2/3 - 1/4*cos(t) - 2/5*cos(2*t) - 1/60*cos(3*t)";

FourierCoeffs forge(int K, std::vector<std::complex<double>> vals, std::optional<int> degree = {}) {
  FourierCoeffs c;
  c.k_min = -K;
  c.k_max = K;
  c.values = std::move(vals);
  c.trig_degree = degree;
  return c;
}

double norm_inf_eigs(const SpectralPairing& p) {
  double m = 0.0;
  for (const auto& r : p.records) m = std::max(m, std::abs(r.lamT));
  return std::max(1.0, m);
}
}  // namespace

TEST_CASE("split: constant symbol alternates classes with lamH = +-c") {
  const ToeplitzMatrix t = toeplitz(forge(0, {{3.0, 0.0}}, 0), 5);
  const SpectralPairing p = split_eigendecompose(t);
  REQUIRE(p.records.size() == 5);
  for (int i = 0; i < 5; ++i) {
    const auto& r = p.records[static_cast<size_t>(i)];
    CHECK(r.lamT == doctest::Approx(3.0));
    CHECK(r.lamH == doctest::Approx(i % 2 == 0 ? 3.0 : -3.0));
    CHECK(r.cls == (i % 2 == 0 ? SymClass::symmetric : SymClass::skew));
  }
}

TEST_CASE("split: 2cos(t) at n=3 pairs {-sqrt2, sqrt2} symmetric and {0} skew") {
  const ToeplitzMatrix t = toeplitz(fourier_coeffs(parse_symbol("2*cos(t)"), 2), 3);
  const SpectralPairing p = split_eigendecompose(t);
  const std::vector<double> sym = p.lamT_of(SymClass::symmetric);
  const std::vector<double> skew = p.lamT_of(SymClass::skew);
  REQUIRE(sym.size() == 2);
  REQUIRE(skew.size() == 1);
  CHECK(sym[0] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
  CHECK(sym[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(std::abs(skew[0]) <= 1e-14);
  for (const auto& r : p.records)
    CHECK(r.lamH == (r.cls == SymClass::symmetric ? r.lamT : -r.lamT));
  // Direct flipped solve agrees [brute-force 3x3 oracle]
  const std::vector<double> eh = eig_flipped(flipped(t));
  CHECK(eh[0] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
  CHECK(std::abs(eh[1]) <= 1e-14);
  CHECK(eh[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("split: residuals against retained eigenvectors at n=8") {
  const ToeplitzMatrix t = toeplitz(fourier_coeffs(parse_symbol(kFIgA), 7), 8);
  const SpectralPairing p = split_eigendecompose(t, /*with_vectors=*/true);
  CHECK(p.count_of(SymClass::symmetric) == 4);
  CHECK(p.count_of(SymClass::skew) == 4);
  REQUIRE(p.eigvecs.has_value());
  const Matrix& v = *p.eigvecs;
  const Matrix d = t.dense_real();
  const double scale = norm_inf_eigs(p);
  for (int i = 0; i < 8; ++i) {
    double dev = 0.0;
    for (int r = 0; r < 8; ++r) {
      double acc = 0.0;
      for (int k = 0; k < 8; ++k) acc += d(r, k) * v(k, i);
      dev += (acc - p.records[static_cast<size_t>(i)].lamT * v(r, i)) *
             (acc - p.records[static_cast<size_t>(i)].lamT * v(r, i));
    }
    CHECK(std::sqrt(dev) <= 1e-12 * scale);
  }
  // Eigenvector symmetry classes: Y v = +v (symmetric) or -v (skew).
  for (int i = 0; i < 8; ++i) {
    const double sign = p.records[static_cast<size_t>(i)].cls == SymClass::symmetric ? 1.0 : -1.0;
    double dev = 0.0;
    for (int r = 0; r < 8; ++r) dev = std::max(dev, std::abs(v(7 - r, i) - sign * v(r, i)));
    CHECK(dev <= 1e-9);
  }
  // Eigenvalues agree with the dense oracle.
  std::vector<double> ours = p.lamT();
  std::sort(ours.begin(), ours.end());
  const std::vector<double> ref = oracle::jacobi_eigenvalues(d);
  for (int i = 0; i < 8; ++i)
    CHECK(std::abs(ours[static_cast<size_t>(i)] - ref[static_cast<size_t>(i)]) <= 1e-12 * scale);
}

TEST_CASE("split requires a real symmetric Toeplitz input") {
  CHECK_THROWS_AS(split_eigendecompose(toeplitz(forge(1, {{0, 0}, {2, 0}, {1, 0}}, 1), 4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(split_eigendecompose(toeplitz(forge(1, {{0, 1}, {2, 0}, {0, -1}}, 1), 4)),
                  std::invalid_argument);
}

TEST_CASE("reconstruction and the Delta identity with retained eigenvectors") {
  std::mt19937_64 rng(5);
  const SymbolSpec s = parse_symbol(oracle::random_even_poly_text(rng, 4));
  const int n = 12;
  const ToeplitzMatrix t = toeplitz(fourier_coeffs(s, n - 1), n);
  const SpectralPairing p = split_eigendecompose(t, true);
  const Matrix& v = *p.eigvecs;
  const Matrix d = t.dense_real();
  const FlippedMatrix h = flipped(t);
  const double scale = norm_inf_eigs(p);
  double devT = 0.0, devH = 0.0, devY = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double accT = 0.0, accH = 0.0, accY = 0.0;
      for (int k = 0; k < n; ++k) {
        const auto& r = p.records[static_cast<size_t>(k)];
        accT += v(i, k) * r.lamT * v(j, k);
        accH += v(i, k) * r.lamH * v(j, k);
        accY += v(i, k) * (k % 2 == 0 ? 1.0 : -1.0) * v(j, k);
      }
      devT = std::max(devT, std::abs(accT - d(i, j)));
      devH = std::max(devH, std::abs(accH - h.entry(i, j)));
      devY = std::max(devY, std::abs(accY - (j == n - 1 - i ? 1.0 : 0.0)));
    }
  CHECK(devT <= 1e-11 * n * scale);
  CHECK(devH <= 1e-11 * n * scale);
  CHECK(devY <= 1e-11 * n * scale);
}

TEST_CASE("class counts are ceil/floor of n/2 for n = 1..64") {
  const FourierCoeffs c = fourier_coeffs(parse_symbol(kFIgA), 63);
  for (int n = 1; n <= 64; ++n) {
    const SpectralPairing p = split_eigendecompose(toeplitz(c, n));
    CHECK(p.count_of(SymClass::symmetric) == (n + 1) / 2);
    CHECK(p.count_of(SymClass::skew) == n / 2);
  }
}

TEST_CASE("multiset identity eig(H) = {(-1)^{i+1} lamT_i} for random even polys") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    const SymbolSpec s = parse_symbol(oracle::random_even_poly_text(rng, 8));
    const int n = 16 + 6 * trial;
    const ToeplitzMatrix t = toeplitz(fourier_coeffs(s, n - 1), n);
    const SpectralPairing p = split_eigendecompose(t);
    std::vector<double> lh = p.lamH();
    std::sort(lh.begin(), lh.end());
    const std::vector<double> ref = eig_flipped(flipped(t));
    const double scale = norm_inf_eigs(p);
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(lh[static_cast<size_t>(i)] - ref[static_cast<size_t>(i)]) <= 1e-10 * scale);
  }
}

TEST_CASE("strict inclusion: lamT inside (m_f, M_f), lamH in the split union") {
  const SymbolSpec s = parse_symbol(kFIgA);
  const RangeInfo ri = range_info(s);
  const ToeplitzMatrix t = toeplitz(fourier_coeffs(s, 15), 16);
  const SpectralPairing p = split_eigendecompose(t);
  for (const auto& r : p.records) {
    CHECK(r.lamT > ri.inf_f);
    CHECK(r.lamT < ri.sup_f);
    const bool in_pos = r.lamH > ri.inf_f && r.lamH < ri.sup_f;
    const bool in_neg = r.lamH > -ri.sup_f && r.lamH < -ri.inf_f;
    CHECK((in_pos || in_neg));
  }
}

TEST_CASE("eig_flipped: H_3(1) = Y_3 has eigenvalues {-1, 1, 1}") {
  const std::vector<double> e = eig_flipped(flipped(toeplitz(forge(0, {{1.0, 0.0}}, 0), 3)));
  CHECK(e[0] == doctest::Approx(-1.0));
  CHECK(e[1] == doctest::Approx(1.0));
  CHECK(e[2] == doctest::Approx(1.0));
}

TEST_CASE("singular_cross_check: |eig H| matches sigma(T)") {
  // Lower bidiagonal from f = 2 + e^{it}.
  const ToeplitzMatrix t = toeplitz(forge(1, {{0, 0}, {2, 0}, {1, 0}}, 1), 8);
  const SingularReport rep = singular_cross_check(t);
  CHECK(rep.max_dev <= 1e-12 * 3.0);
  // Identity: all singular values 1.
  const SingularReport id = singular_cross_check(toeplitz(forge(0, {{1.0, 0.0}}, 0), 6));
  for (double v : id.sigmaT) CHECK(v == doctest::Approx(1.0));
  for (double v : id.absLamH) CHECK(v == doctest::Approx(1.0));
  // Complex coefficients are rejected.
  CHECK_THROWS_AS(singular_cross_check(toeplitz(forge(1, {{0, 1}, {2, 0}, {0, 0}}, 1), 4)),
                  std::invalid_argument);
}

TEST_CASE("singvec_eigvec_check: flipped singular vectors solve H^2") {
  // f = 1: H^2 = I, residuals vanish.
  const SingvecResiduals id = singvec_eigvec_check(toeplitz(forge(0, {{1.0, 0.0}}, 0), 5));
  CHECK(id.left_max <= 1e-14);
  CHECK(id.right_max <= 1e-14);
  // f = 2 + e^{it} at n = 6.
  const ToeplitzMatrix t6 = toeplitz(forge(1, {{0, 0}, {2, 0}, {1, 0}}, 1), 6);
  const SingvecResiduals r6 = singvec_eigvec_check(t6);
  CHECK(r6.left_max <= 1e-10 * 9.0);   // 1e-10 * ||T||^2
  CHECK(r6.right_max <= 1e-10 * 9.0);
  // f-IgA at n = 8.
  const ToeplitzMatrix t8 = toeplitz(fourier_coeffs(parse_symbol(kFIgA), 7), 8);
  const SingvecResiduals r8 = singvec_eigvec_check(t8);
  CHECK(r8.left_max <= 1e-10 * 4.0);
  CHECK(r8.right_max <= 1e-10 * 4.0);
}
