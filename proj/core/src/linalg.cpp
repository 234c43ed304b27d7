#include "fliptoep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fliptoep/errors.hpp"

namespace fliptoep {

namespace {

double sign_like(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

// Householder reduction of a real symmetric matrix to tridiagonal form.
// On return d holds the diagonal and e[1..n-1] the subdiagonal. When
// `vectors` is set, a is overwritten with the accumulated orthogonal Q.
void householder_tridiag(Matrix& a, std::vector<double>& d, std::vector<double>& e, bool vectors) {
  const int n = a.rows();
  d.assign(static_cast<size_t>(n), 0.0);
  e.assign(static_cast<size_t>(n), 0.0);

  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::abs(a(i, k));
      if (scale == 0.0) {
        e[i] = a(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          a(i, k) /= scale;
          h += a(i, k) * a(i, k);
        }
        double f = a(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        a(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          if (vectors) a(j, i) = a(i, j) / h;
          double g2 = 0.0;
          for (int k = 0; k <= j; ++k) g2 += a(j, k) * a(i, k);
          for (int k = j + 1; k <= l; ++k) g2 += a(k, j) * a(i, k);
          e[j] = g2 / h;
          f += e[j] * a(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = a(i, j);
          const double g2 = e[j] - hh * f;
          e[j] = g2;
          for (int k = 0; k <= j; ++k) a(j, k) -= f * e[k] + g2 * a(i, k);
        }
      }
    } else {
      e[i] = a(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;

  if (vectors) {
    for (int i = 0; i < n; ++i) {
      const int l = i - 1;
      if (d[i] != 0.0) {
        for (int j = 0; j <= l; ++j) {
          double g = 0.0;
          for (int k = 0; k <= l; ++k) g += a(i, k) * a(k, j);
          for (int k = 0; k <= l; ++k) a(k, j) -= g * a(k, i);
        }
      }
      d[i] = a(i, i);
      a(i, i) = 1.0;
      for (int j = 0; j <= l; ++j) a(j, i) = a(i, j) = 0.0;
    }
  } else {
    for (int i = 0; i < n; ++i) d[i] = a(i, i);
  }
}

// Implicit-shift QL iteration on the tridiagonal (d, e). When z is non-null,
// rotations are accumulated into its columns.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, Matrix* z) {
  const int n = static_cast<int>(d.size());
  if (n <= 1) return;
  for (int i = 1; i < n; ++i) e[static_cast<size_t>(i - 1)] = e[static_cast<size_t>(i)];
  e[static_cast<size_t>(n - 1)] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[static_cast<size_t>(m)]) + std::abs(d[static_cast<size_t>(m + 1)]);
        if (std::abs(e[static_cast<size_t>(m)]) + dd == dd) break;
      }
      if (m != l) {
        if (iter++ == 50) throw NumericError("ql_implicit: too many iterations");
        double g = (d[static_cast<size_t>(l + 1)] - d[static_cast<size_t>(l)]) /
                   (2.0 * e[static_cast<size_t>(l)]);
        double r = std::hypot(g, 1.0);
        g = d[static_cast<size_t>(m)] - d[static_cast<size_t>(l)] +
            e[static_cast<size_t>(l)] / (g + sign_like(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool early = false;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[static_cast<size_t>(i)];
          const double b = c * e[static_cast<size_t>(i)];
          r = std::hypot(f, g);
          e[static_cast<size_t>(i + 1)] = r;
          if (r == 0.0) {
            d[static_cast<size_t>(i + 1)] -= p;
            e[static_cast<size_t>(m)] = 0.0;
            early = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[static_cast<size_t>(i + 1)] - p;
          r = (d[static_cast<size_t>(i)] - g) * s + 2.0 * c * b;
          p = s * r;
          d[static_cast<size_t>(i + 1)] = g + p;
          g = c * r - b;
          if (z != nullptr) {
            for (int k = 0; k < z->rows(); ++k) {
              f = (*z)(k, i + 1);
              (*z)(k, i + 1) = s * (*z)(k, i) + c * f;
              (*z)(k, i) = c * (*z)(k, i) - s * f;
            }
          }
        }
        if (early) continue;
        d[static_cast<size_t>(l)] -= p;
        e[static_cast<size_t>(l)] = g;
        e[static_cast<size_t>(m)] = 0.0;
      }
    } while (m != l);
  }
}

void sort_ascending(std::vector<double>& vals, Matrix* vecs) {
  const int n = static_cast<int>(vals.size());
  std::vector<int> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return vals[static_cast<size_t>(a)] < vals[static_cast<size_t>(b)];
  });
  std::vector<double> sorted(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) sorted[static_cast<size_t>(i)] = vals[static_cast<size_t>(idx[static_cast<size_t>(i)])];
  vals = std::move(sorted);
  if (vecs != nullptr) {
    Matrix p(vecs->rows(), n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < vecs->rows(); ++i) p(i, j) = (*vecs)(i, idx[static_cast<size_t>(j)]);
    *vecs = std::move(p);
  }
}

}  // namespace

std::vector<double> sym_eigenvalues(Matrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("sym_eigenvalues: matrix must be square");
  if (a.rows() == 0) return {};
  std::vector<double> d, e;
  householder_tridiag(a, d, e, /*vectors=*/false);
  ql_implicit(d, e, nullptr);
  sort_ascending(d, nullptr);
  return d;
}

SymEig sym_eigensystem(Matrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("sym_eigensystem: matrix must be square");
  SymEig out;
  if (a.rows() == 0) return out;
  std::vector<double> d, e;
  householder_tridiag(a, d, e, /*vectors=*/true);
  ql_implicit(d, e, &a);
  sort_ascending(d, &a);
  out.values = std::move(d);
  out.vectors = std::move(a);
  return out;
}

// ---------------------------------------------------------------------------
// Golub-Kahan-Reinsch SVD

namespace {

void svdcmp(Matrix& a, std::vector<double>& w, Matrix& v) {
  const int m = a.rows();
  const int n = a.cols();
  w.assign(static_cast<size_t>(n), 0.0);
  v = Matrix(n, n);
  std::vector<double> rv1(static_cast<size_t>(n), 0.0);

  double g = 0.0, scale = 0.0, anorm = 0.0;
  int l = 0;

  // Householder bidiagonalization.
  for (int i = 0; i < n; ++i) {
    l = i + 1;
    rv1[static_cast<size_t>(i)] = scale * g;
    g = scale = 0.0;
    if (i < m) {
      for (int k = i; k < m; ++k) scale += std::abs(a(k, i));
      if (scale != 0.0) {
        double s = 0.0;
        for (int k = i; k < m; ++k) {
          a(k, i) /= scale;
          s += a(k, i) * a(k, i);
        }
        double f = a(i, i);
        g = -sign_like(std::sqrt(s), f);
        const double h = f * g - s;
        a(i, i) = f - g;
        for (int j = l; j < n; ++j) {
          double s2 = 0.0;
          for (int k = i; k < m; ++k) s2 += a(k, i) * a(k, j);
          f = s2 / h;
          for (int k = i; k < m; ++k) a(k, j) += f * a(k, i);
        }
        for (int k = i; k < m; ++k) a(k, i) *= scale;
      }
    }
    w[static_cast<size_t>(i)] = scale * g;
    g = scale = 0.0;
    if (i < m && i != n - 1) {
      for (int k = l; k < n; ++k) scale += std::abs(a(i, k));
      if (scale != 0.0) {
        double s = 0.0;
        for (int k = l; k < n; ++k) {
          a(i, k) /= scale;
          s += a(i, k) * a(i, k);
        }
        double f = a(i, l);
        g = -sign_like(std::sqrt(s), f);
        const double h = f * g - s;
        a(i, l) = f - g;
        for (int k = l; k < n; ++k) rv1[static_cast<size_t>(k)] = a(i, k) / h;
        for (int j = l; j < m; ++j) {
          double s2 = 0.0;
          for (int k = l; k < n; ++k) s2 += a(j, k) * a(i, k);
          for (int k = l; k < n; ++k) a(j, k) += s2 * rv1[static_cast<size_t>(k)];
        }
        for (int k = l; k < n; ++k) a(i, k) *= scale;
      }
    }
    anorm = std::max(anorm, std::abs(w[static_cast<size_t>(i)]) + std::abs(rv1[static_cast<size_t>(i)]));
  }

  // Accumulate right-hand transformations.
  for (int i = n - 1; i >= 0; --i) {
    if (i < n - 1) {
      if (g != 0.0) {
        for (int j = l; j < n; ++j) v(j, i) = (a(i, j) / a(i, l)) / g;
        for (int j = l; j < n; ++j) {
          double s = 0.0;
          for (int k = l; k < n; ++k) s += a(i, k) * v(k, j);
          for (int k = l; k < n; ++k) v(k, j) += s * v(k, i);
        }
      }
      for (int j = l; j < n; ++j) v(i, j) = v(j, i) = 0.0;
    }
    v(i, i) = 1.0;
    g = rv1[static_cast<size_t>(i)];
    l = i;
  }

  // Accumulate left-hand transformations.
  for (int i = std::min(m, n) - 1; i >= 0; --i) {
    l = i + 1;
    g = w[static_cast<size_t>(i)];
    for (int j = l; j < n; ++j) a(i, j) = 0.0;
    if (g != 0.0) {
      g = 1.0 / g;
      for (int j = l; j < n; ++j) {
        double s = 0.0;
        for (int k = l; k < m; ++k) s += a(k, i) * a(k, j);
        const double f = (s / a(i, i)) * g;
        for (int k = i; k < m; ++k) a(k, j) += f * a(k, i);
      }
      for (int j = i; j < m; ++j) a(j, i) *= g;
    } else {
      for (int j = i; j < m; ++j) a(j, i) = 0.0;
    }
    ++a(i, i);
  }

  // Diagonalize the bidiagonal form.
  for (int k = n - 1; k >= 0; --k) {
    for (int its = 1;; ++its) {
      if (its > 50) throw NumericError("svd: no convergence in 50 iterations");
      bool flag = true;
      int nm = 0;
      int ll;
      for (ll = k; ll >= 0; --ll) {
        nm = ll - 1;
        if (std::abs(rv1[static_cast<size_t>(ll)]) + anorm == anorm) {
          flag = false;
          break;
        }
        if (std::abs(w[static_cast<size_t>(nm)]) + anorm == anorm) break;
      }
      if (flag) {
        // Cancel rv1[ll] for w[nm] ~ 0.
        double c = 0.0, s = 1.0;
        for (int i = ll; i <= k; ++i) {
          double f = s * rv1[static_cast<size_t>(i)];
          rv1[static_cast<size_t>(i)] = c * rv1[static_cast<size_t>(i)];
          if (std::abs(f) + anorm == anorm) break;
          g = w[static_cast<size_t>(i)];
          double h = std::hypot(f, g);
          w[static_cast<size_t>(i)] = h;
          h = 1.0 / h;
          c = g * h;
          s = -f * h;
          for (int j = 0; j < m; ++j) {
            const double y = a(j, nm);
            const double z = a(j, i);
            a(j, nm) = y * c + z * s;
            a(j, i) = z * c - y * s;
          }
        }
      }
      double z = w[static_cast<size_t>(k)];
      if (ll == k) {
        if (z < 0.0) {
          w[static_cast<size_t>(k)] = -z;
          for (int j = 0; j < n; ++j) v(j, k) = -v(j, k);
        }
        break;
      }
      double x = w[static_cast<size_t>(ll)];
      nm = k - 1;
      double y = w[static_cast<size_t>(nm)];
      g = rv1[static_cast<size_t>(nm)];
      double h = rv1[static_cast<size_t>(k)];
      double f = ((y - z) * (y + z) + (g - h) * (g + h)) / (2.0 * h * y);
      g = std::hypot(f, 1.0);
      f = ((x - z) * (x + z) + h * ((y / (f + sign_like(g, f))) - h)) / x;
      double c = 1.0, s = 1.0;
      for (int j = ll; j <= nm; ++j) {
        const int i = j + 1;
        g = rv1[static_cast<size_t>(i)];
        y = w[static_cast<size_t>(i)];
        h = s * g;
        g = c * g;
        z = std::hypot(f, h);
        rv1[static_cast<size_t>(j)] = z;
        c = f / z;
        s = h / z;
        f = x * c + g * s;
        g = g * c - x * s;
        h = y * s;
        y *= c;
        for (int jj = 0; jj < n; ++jj) {
          x = v(jj, j);
          z = v(jj, i);
          v(jj, j) = x * c + z * s;
          v(jj, i) = z * c - x * s;
        }
        z = std::hypot(f, h);
        w[static_cast<size_t>(j)] = z;
        if (z != 0.0) {
          z = 1.0 / z;
          c = f * z;
          s = h * z;
        }
        f = c * g + s * y;
        x = c * y - s * g;
        for (int jj = 0; jj < m; ++jj) {
          y = a(jj, j);
          z = a(jj, i);
          a(jj, j) = y * c + z * s;
          a(jj, i) = z * c - y * s;
        }
      }
      rv1[static_cast<size_t>(ll)] = 0.0;
      rv1[static_cast<size_t>(k)] = f;
      w[static_cast<size_t>(k)] = x;
    }
  }
}

}  // namespace

Svd svd(Matrix a) {
  std::vector<double> w;
  Matrix v;
  svdcmp(a, w, v);

  // svdcmp leaves triplets unordered; sort ascending and permute U, V with it.
  const int n = static_cast<int>(w.size());
  std::vector<int> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
    return w[static_cast<size_t>(x)] < w[static_cast<size_t>(y)];
  });
  Svd res;
  res.sigma.resize(static_cast<size_t>(n));
  res.u = Matrix(a.rows(), n);
  res.v = Matrix(v.rows(), n);
  for (int j = 0; j < n; ++j) {
    const int src = idx[static_cast<size_t>(j)];
    res.sigma[static_cast<size_t>(j)] = w[static_cast<size_t>(src)];
    for (int i = 0; i < a.rows(); ++i) res.u(i, j) = a(i, src);
    for (int i = 0; i < v.rows(); ++i) res.v(i, j) = v(i, src);
  }
  return res;
}

std::vector<double> singular_values(Matrix a) {
  std::vector<double> w;
  Matrix v;
  svdcmp(a, w, v);
  std::sort(w.begin(), w.end());
  return w;
}

std::vector<double> singular_values_complex(const CMatrix& a) {
  const int n = a.rows();
  Matrix r(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const auto z = a(i, j);
      r(i, j) = z.real();
      r(i, j + n) = -z.imag();
      r(i + n, j) = z.imag();
      r(i + n, j + n) = z.real();
    }
  std::vector<double> w = singular_values(std::move(r));
  // Each sigma of the complex matrix appears twice; take one per pair.
  std::vector<double> out;
  out.reserve(static_cast<size_t>(n));
  for (size_t i = 0; i + 1 < w.size(); i += 2) out.push_back(0.5 * (w[i] + w[i + 1]));
  return out;
}

}  // namespace fliptoep
