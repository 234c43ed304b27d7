// Test-only reference implementations, independent of the library's
// Householder/QL, GKR-SVD, and adaptive-Simpson code paths.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "fliptoep/dense.hpp"
#include "fliptoep/symbol.hpp"

namespace oracle {

// Cyclic Jacobi eigenvalue iteration for real symmetric matrices.
inline std::vector<double> jacobi_eigenvalues(fliptoep::Matrix a) {
  const int n = a.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off < 1e-30 * n * n) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> vals(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) vals[static_cast<size_t>(i)] = a(i, i);
  std::sort(vals.begin(), vals.end());
  return vals;
}

// Exhaustive min over all permutations of max_i |a_i - b_{perm(i)}|.
inline double brute_force_sup_match(std::vector<double> a, std::vector<double> b) {
  std::sort(b.begin(), b.end());
  double best = std::numeric_limits<double>::infinity();
  do {
    double dev = 0.0;
    for (size_t i = 0; i < a.size(); ++i) dev = std::max(dev, std::abs(a[i] - b[i]));
    best = std::min(best, dev);
  } while (std::next_permutation(b.begin(), b.end()));
  return best;
}

// Composite 16-point Gauss-Legendre quadrature; independent of the library's
// adaptive Simpson.
inline double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                             int panels = 256) {
  static const double xs[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                               0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                               0.9445750230732326, 0.9894009349916499};
  static const double ws[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                               0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                               0.0622535239386479, 0.0271524594117541};
  double total = 0.0;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h, half = 0.5 * h;
    double acc = 0.0;
    for (int i = 0; i < 8; ++i)
      acc += ws[i] * (f(mid - half * xs[i]) + f(mid + half * xs[i]));
    total += acc * half;
  }
  return total;
}

// Row-reduction rank with partial pivoting.
inline int matrix_rank(fliptoep::Matrix a, double tol = 1e-10) {
  const int m = a.rows(), n = a.cols();
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int piv = rank;
    for (int r = rank + 1; r < m; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (std::abs(a(piv, col)) < tol) continue;
    for (int k = 0; k < n; ++k) std::swap(a(piv, k), a(rank, k));
    for (int r = 0; r < m; ++r) {
      if (r == rank) continue;
      const double factor = a(r, col) / a(rank, col);
      for (int k = 0; k < n; ++k) a(r, k) -= factor * a(rank, k);
    }
    ++rank;
  }
  return rank;
}

// Eigenvalues of T_n(2 cos t): 2 cos(j pi / (n+1)), ascending.
inline std::vector<double> tridiag_cos_eigenvalues(int n) {
  std::vector<double> v(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j)
    v[static_cast<size_t>(j - 1)] = 2.0 * std::cos((n + 1 - j) * std::numbers::pi / (n + 1));
  return v;
}

// Random trig polynomials rendered as DSL text (fixed-point literals so the
// grammar accepts them). Even ones use cosines only; general real-coefficient
// ones add exp(i k t) terms via e^{-ikt} = 2 cos(kt) - e^{ikt}.
inline std::string fixed_lit(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17f", std::abs(v));
  return buf;
}

inline std::string random_even_poly_text(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const int r = deg(rng);
  std::string text;
  const double c0 = coef(rng);
  text += (c0 < 0 ? "-" : "") + fixed_lit(c0);
  for (int k = 1; k <= r; ++k) {
    double ck = coef(rng);
    if (k == r && std::abs(ck) < 0.1) ck = ck < 0 ? ck - 0.5 : ck + 0.5;  // keep degree r
    text += (ck < 0 ? " - " : " + ") + fixed_lit(ck) + "*cos(" + std::to_string(k) + "*t)";
  }
  return text;
}

inline std::string random_real_coeff_poly_text(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const int r = deg(rng);
  std::string text;
  const double c0 = coef(rng);
  text += (c0 < 0 ? "-" : "") + fixed_lit(c0);
  for (int k = 1; k <= r; ++k) {
    double fp = coef(rng);  // coefficient of e^{ikt}
    double fm = coef(rng);  // coefficient of e^{-ikt}
    if (k == r && std::abs(fp) + std::abs(fm) < 0.2) fp += fp < 0 ? -0.5 : 0.5;
    // fp e^{ikt} + fm e^{-ikt} = (fp - fm) e^{ikt} + 2 fm cos(kt)
    const double ce = fp - fm;
    const double cc = 2.0 * fm;
    if (ce != 0.0)
      text += (ce < 0 ? " - " : " + ") + fixed_lit(ce) + "*exp(i*" + std::to_string(k) + "*t)";
    if (cc != 0.0)
      text += (cc < 0 ? " - " : " + ") + fixed_lit(cc) + "*cos(" + std::to_string(k) + "*t)";
  }
  return text;
}

}  // namespace oracle
