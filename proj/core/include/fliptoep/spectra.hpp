#pragma once

#include <optional>
#include <vector>

#include "fliptoep/dense.hpp"
#include "fliptoep/matgen.hpp"

namespace fliptoep {

enum class SymClass { symmetric, skew };

struct PairingRecord {
  int index = 0;  // 1-based position in the interleaved ordering
  double lamT = 0.0;
  double lamH = 0.0;
  SymClass cls = SymClass::symmetric;
};

/// Eigenvalues of T_n and H_n in an ordering where odd positions carry
/// symmetric eigenvectors and even positions skew ones, so that
/// lamH_i = (-1)^{i+1} lamT_i. Within each class values ascend.
struct SpectralPairing {
  int n = 0;
  std::vector<PairingRecord> records;
  std::optional<Matrix> eigvecs;  // column i-1 pairs with records[i-1]

  std::vector<double> lamT_of(SymClass c) const;
  std::vector<double> lamT() const;
  std::vector<double> lamH() const;
  int count_of(SymClass c) const;
};

/// Diagonalizes a real symmetric T_n through the centrosymmetric split:
/// project onto the symmetric/skew-symmetric eigenspaces of Y_n, solve the
/// two half-size blocks, interleave ascending-by-class, and synthesize the
/// flipped eigenvalues by the alternating sign rule.
SpectralPairing split_eigendecompose(const ToeplitzMatrix& t, bool with_vectors = false);

/// Eigenvalues of H_n by a direct dense symmetric solve, ascending.
/// Cross-validation path independent of the split.
std::vector<double> eig_flipped(const FlippedMatrix& h);

struct SingularReport {
  std::vector<double> sigmaT;   // ascending
  std::vector<double> absLamH;  // ascending
  double max_dev = 0.0;
};

/// sigma(T_n) from an SVD against |eig(H_n)| from the direct symmetric solve.
SingularReport singular_cross_check(const ToeplitzMatrix& t);

struct SingvecResiduals {
  double left_max = 0.0;   // max_i ||H^2 (Y u_i) - lamH_i^2 (Y u_i)||
  double right_max = 0.0;  // max_i ||H^2 v_i - lamH_i^2 v_i||
};

/// Checks that flipped left singular vectors and right singular vectors of
/// T_n are eigenvectors of H_n^2 for the matched eigenvalue squares.
SingvecResiduals singvec_eigvec_check(const ToeplitzMatrix& t);

}  // namespace fliptoep
