#pragma once

#include <complex>
#include <vector>

#include "fliptoep/dense.hpp"
#include "fliptoep/symbol.hpp"

namespace fliptoep {

/// T_n(f): entry (i,j) = f_{i-j}. Stores the 2n-1 defining diagonals.
class ToeplitzMatrix {
public:
  ToeplitzMatrix(int n, std::vector<std::complex<double>> diagonals);

  int order() const { return n_; }
  bool is_real() const { return real_; }

  /// Diagonal value f_k, k in [-(n-1), n-1].
  std::complex<double> diag(int k) const { return diag_[static_cast<size_t>(k + n_ - 1)]; }
  double diag_real(int k) const { return diag_[static_cast<size_t>(k + n_ - 1)].real(); }

  std::complex<double> entry(int i, int j) const { return diag(i - j); }  // 0-based

  Matrix dense_real() const;     // requires is_real()
  CMatrix dense_complex() const;

  /// y = T x for real T.
  void apply_real(std::span<const double> x, std::span<double> y) const;

private:
  int n_;
  std::vector<std::complex<double>> diag_;  // index k + n - 1
  bool real_;
};

/// H_n(f) = Y_n T_n(f) for real-coefficient f; exactly symmetric by
/// construction (every entry is read from the same stored diagonal).
class FlippedMatrix {
public:
  FlippedMatrix(int n, Matrix h);

  int order() const { return n_; }
  const Matrix& dense() const { return h_; }
  double entry(int i, int j) const { return h_(i, j); }

  void apply(std::span<const double> x, std::span<double> y) const { matvec(h_, x, y); }

private:
  int n_;
  Matrix h_;
};

/// Builds T_n(f) from coefficients. Coefficients must cover k = -(n-1)..n-1
/// unless they came from the exact trig-poly path, in which case missing
/// orders beyond the degree are genuine zeros.
ToeplitzMatrix toeplitz(const FourierCoeffs& coeffs, int n);

/// The exchange (flip) matrix Y_n.
Matrix exchange(int n);

/// H = Y T, row-reversed T. Requires real coefficients.
FlippedMatrix flipped(const ToeplitzMatrix& t);

/// Wrap-around circulant C_n(f) for a trig polynomial of degree r; first
/// column [f_0, f_1, ..., f_r, 0, ..., 0, f_{-r}, ..., f_{-1}].
/// Requires n >= 2r+1; satisfies rank(T_n - C_n) <= 2r.
CMatrix circulant(const FourierCoeffs& coeffs, int n);

}  // namespace fliptoep
