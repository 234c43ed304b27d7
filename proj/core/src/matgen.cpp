#include "fliptoep/matgen.hpp"

#include <stdexcept>

namespace fliptoep {

ToeplitzMatrix::ToeplitzMatrix(int n, std::vector<std::complex<double>> diagonals)
    : n_(n), diag_(std::move(diagonals)) {
  if (n_ < 1) throw std::invalid_argument("toeplitz: order must be >= 1");
  if (diag_.size() != static_cast<size_t>(2 * n_ - 1))
    throw std::invalid_argument("toeplitz: need 2n-1 diagonal values");
  real_ = true;
  for (const auto& v : diag_) real_ = real_ && v.imag() == 0.0;
}

Matrix ToeplitzMatrix::dense_real() const {
  if (!real_) throw std::invalid_argument("dense_real: matrix has complex entries");
  Matrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = diag_real(i - j);
  return m;
}

CMatrix ToeplitzMatrix::dense_complex() const {
  CMatrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = diag(i - j);
  return m;
}

void ToeplitzMatrix::apply_real(std::span<const double> x, std::span<double> y) const {
  for (int i = 0; i < n_; ++i) {
    double acc = 0.0;
    const std::complex<double>* base = diag_.data() + (i + n_ - 1);
    for (int j = 0; j < n_; ++j) acc += base[-j].real() * x[static_cast<size_t>(j)];
    y[static_cast<size_t>(i)] = acc;
  }
}

FlippedMatrix::FlippedMatrix(int n, Matrix h) : n_(n), h_(std::move(h)) {}

ToeplitzMatrix toeplitz(const FourierCoeffs& coeffs, int n) {
  if (n < 1) throw std::invalid_argument("toeplitz: order must be >= 1");
  const int need = n - 1;
  if (!coeffs.covers(need) || !coeffs.covers(-need)) {
    if (!coeffs.trig_degree)
      throw std::invalid_argument(
          "toeplitz: coefficients do not cover k = -(n-1)..n-1 and the symbol is not a known "
          "trig polynomial");
    // Beyond the polynomial degree every coefficient is exactly zero.
  }
  std::vector<std::complex<double>> d(static_cast<size_t>(2 * n - 1));
  for (int k = -need; k <= need; ++k)
    d[static_cast<size_t>(k + need)] = coeffs.covers(k) ? coeffs.at(k) : 0.0;
  return ToeplitzMatrix(n, std::move(d));
}

Matrix exchange(int n) {
  if (n < 1) throw std::invalid_argument("exchange: order must be >= 1");
  Matrix y(n, n);
  for (int i = 0; i < n; ++i) y(i, n - 1 - i) = 1.0;
  return y;
}

FlippedMatrix flipped(const ToeplitzMatrix& t) {
  if (!t.is_real())
    throw std::invalid_argument("flipped: requires real Fourier coefficients");
  const int n = t.order();
  Matrix h(n, n);
  // H(i,j) = T(n-1-i, j) = f_{n-1-i-j}; symmetric in (i,j) by construction.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = t.diag_real(n - 1 - i - j);
  return FlippedMatrix(n, std::move(h));
}

CMatrix circulant(const FourierCoeffs& coeffs, int n) {
  if (!coeffs.trig_degree)
    throw std::invalid_argument("circulant: symbol must be a trig polynomial");
  const int r = *coeffs.trig_degree;
  if (n < 2 * r + 1) throw std::invalid_argument("circulant: requires n >= 2r+1");
  std::vector<std::complex<double>> col(static_cast<size_t>(n), {0.0, 0.0});
  for (int k = 0; k <= r; ++k) col[static_cast<size_t>(k)] = coeffs.covers(k) ? coeffs.at(k) : 0.0;
  for (int k = 1; k <= r; ++k)
    col[static_cast<size_t>(n - k)] = coeffs.covers(-k) ? coeffs.at(-k) : 0.0;
  CMatrix c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = col[static_cast<size_t>(((i - j) % n + n) % n)];
  return c;
}

}  // namespace fliptoep
