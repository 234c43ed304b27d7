#pragma once

#include <vector>

#include "fliptoep/dense.hpp"

namespace fliptoep {

struct SymEig {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column i pairs with values[i]
};

/// Eigenvalues of a real symmetric matrix, ascending. Householder
/// tridiagonalization followed by implicit-shift QL.
std::vector<double> sym_eigenvalues(Matrix a);

/// Full eigensystem of a real symmetric matrix, values ascending with
/// matching orthonormal eigenvector columns.
SymEig sym_eigensystem(Matrix a);

struct Svd {
  Matrix u;                   // left singular vectors as columns
  std::vector<double> sigma;  // ascending, >= 0
  Matrix v;                   // right singular vectors as columns
};

/// A = U diag(sigma) V^T by Golub-Kahan-Reinsch bidiagonalization + implicit
/// QR. Singular triplets are returned in ascending sigma order.
Svd svd(Matrix a);

/// Singular values only, ascending.
std::vector<double> singular_values(Matrix a);

/// Singular values of a complex matrix through its 2n x 2n realification
/// [[Re, -Im], [Im, Re]], whose spectrum doubles each sigma. Ascending.
std::vector<double> singular_values_complex(const CMatrix& a);

}  // namespace fliptoep
