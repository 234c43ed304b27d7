#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fliptoep {

/// Dense row-major real matrix. Plain storage, no view magic; sized for
/// desk-scale problems (n up to a few thousand).
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  double* row(int i) { return data_.data() + static_cast<size_t>(i) * cols_; }
  const double* row(int i) const { return data_.data() + static_cast<size_t>(i) * cols_; }

  std::span<const double> flat() const { return data_; }
  std::span<double> flat() { return data_; }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

/// Dense row-major complex matrix (construction-side only; solvers are real).
class CMatrix {
public:
  using value_type = std::complex<double>;

  CMatrix() = default;
  CMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  value_type& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  value_type operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<value_type> data_;
};

inline void matvec(const Matrix& a, std::span<const double> x, std::span<double> y) {
  assert(static_cast<int>(x.size()) == a.cols() && static_cast<int>(y.size()) == a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    const double* r = a.row(i);
    double acc = 0.0;
    for (int j = 0; j < a.cols(); ++j) acc += r[j] * x[j];
    y[i] = acc;
  }
}

inline std::vector<double> matvec(const Matrix& a, std::span<const double> x) {
  std::vector<double> y(a.rows());
  matvec(a, x, y);
  return y;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.rows());
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

inline double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace fliptoep
