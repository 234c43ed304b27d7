#include "fliptoep/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fliptoep/errors.hpp"
#include "fliptoep/linalg.hpp"

namespace fliptoep {

std::vector<double> SpectralPairing::lamT_of(SymClass c) const {
  std::vector<double> out;
  for (const auto& r : records)
    if (r.cls == c) out.push_back(r.lamT);
  return out;
}

std::vector<double> SpectralPairing::lamT() const {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.lamT);
  return out;
}

std::vector<double> SpectralPairing::lamH() const {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.lamH);
  return out;
}

int SpectralPairing::count_of(SymClass c) const {
  int k = 0;
  for (const auto& r : records)
    if (r.cls == c) ++k;
  return k;
}

SpectralPairing split_eigendecompose(const ToeplitzMatrix& t, bool with_vectors) {
  const int n = t.order();
  if (!t.is_real()) throw std::invalid_argument("split_eigendecompose: T must be real");
  for (int k = 1; k < n; ++k)
    if (t.diag_real(k) != t.diag_real(-k))
      throw std::invalid_argument("split_eigendecompose: T must be symmetric (even coefficients)");

  const int np = (n + 1) / 2;  // ceil(n/2), symmetric block
  const int nm = n / 2;        // skew block
  const bool odd = (n % 2) != 0;

  // Projections of T onto the symmetric basis (e_i + e_{n-1-i})/sqrt2 (plus
  // the middle e for odd n) and the skew basis (e_i - e_{n-1-i})/sqrt2.
  // Centrosymmetry collapses each projected entry to two diagonal reads.
  auto a = [&](int i, int j) { return t.diag_real(i - j); };
  Matrix bp(np, np);
  const int half = nm;  // paired columns in the symmetric basis
  for (int i = 0; i < half; ++i)
    for (int j = 0; j < half; ++j) bp(i, j) = a(i, j) + a(i, n - 1 - j);
  if (odd) {
    const int mid = np - 1;
    const double s2 = std::sqrt(2.0);
    for (int i = 0; i < half; ++i) {
      bp(i, mid) = s2 * a(i, (n - 1) / 2);
      bp(mid, i) = bp(i, mid);
    }
    bp(mid, mid) = a((n - 1) / 2, (n - 1) / 2);
  }
  Matrix bm(nm, nm);
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < nm; ++j) bm(i, j) = a(i, j) - a(i, n - 1 - j);

  std::vector<double> vp, vm;
  Matrix zp, zm;
  if (with_vectors) {
    SymEig ep = sym_eigensystem(std::move(bp));
    SymEig em = sym_eigensystem(std::move(bm));
    vp = std::move(ep.values);
    vm = std::move(em.values);
    zp = std::move(ep.vectors);
    zm = std::move(em.vectors);
  } else {
    vp = sym_eigenvalues(std::move(bp));
    vm = sym_eigenvalues(std::move(bm));
  }

  SpectralPairing out;
  out.n = n;
  out.records.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    PairingRecord r;
    r.index = i + 1;
    if (i % 2 == 0) {
      r.cls = SymClass::symmetric;
      r.lamT = vp[static_cast<size_t>(i / 2)];
    } else {
      r.cls = SymClass::skew;
      r.lamT = vm[static_cast<size_t>(i / 2)];
    }
    r.lamH = (i % 2 == 0) ? r.lamT : -r.lamT;
    out.records.push_back(r);
  }

  if (with_vectors) {
    // Lift block eigenvectors back to R^n through the split bases.
    Matrix v(n, n);
    const double inv_s2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; ++i) {
      const int b = i / 2;
      if (i % 2 == 0) {
        for (int r = 0; r < half; ++r) {
          const double w = zp(r, b) * inv_s2;
          v(r, i) += w;
          v(n - 1 - r, i) += w;
        }
        if (odd) v((n - 1) / 2, i) += zp(np - 1, b);
      } else {
        for (int r = 0; r < nm; ++r) {
          const double w = zm(r, b) * inv_s2;
          v(r, i) += w;
          v(n - 1 - r, i) -= w;
        }
      }
    }
    out.eigvecs = std::move(v);
  }
  return out;
}

std::vector<double> eig_flipped(const FlippedMatrix& h) { return sym_eigenvalues(h.dense()); }

SingularReport singular_cross_check(const ToeplitzMatrix& t) {
  if (!t.is_real())
    throw std::invalid_argument("singular_cross_check: requires real coefficients");
  SingularReport rep;
  rep.sigmaT = singular_values(t.dense_real());
  std::vector<double> lh = eig_flipped(flipped(t));
  rep.absLamH.reserve(lh.size());
  for (double v : lh) rep.absLamH.push_back(std::abs(v));
  std::sort(rep.absLamH.begin(), rep.absLamH.end());
  rep.max_dev = 0.0;
  for (size_t i = 0; i < rep.sigmaT.size(); ++i)
    rep.max_dev = std::max(rep.max_dev, std::abs(rep.sigmaT[i] - rep.absLamH[i]));
  return rep;
}

SingvecResiduals singvec_eigvec_check(const ToeplitzMatrix& t) {
  if (!t.is_real())
    throw std::invalid_argument("singvec_eigvec_check: requires real coefficients");
  const int n = t.order();
  const Svd dec = svd(t.dense_real());
  const FlippedMatrix h = flipped(t);

  // Match sigma (ascending) to |lamH| (ascending); the squared values are the
  // eigenvalues of H^2 fed to the residuals.
  std::vector<double> absH = eig_flipped(h);
  for (double& v : absH) v = std::abs(v);
  std::sort(absH.begin(), absH.end());
  double norm_t = 0.0;
  for (double s : dec.sigma) norm_t = std::max(norm_t, s);
  for (int i = 0; i < n; ++i) {
    if (std::abs(absH[static_cast<size_t>(i)] - dec.sigma[static_cast<size_t>(i)]) >
        1e-9 * std::max(1.0, norm_t))
      throw NumericError("singvec_eigvec_check: sigma(T) and |eig(H)| do not match in order");
  }

  SingvecResiduals res;
  std::vector<double> w(static_cast<size_t>(n)), hw(static_cast<size_t>(n)),
      hhw(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double lam2 = dec.sigma[static_cast<size_t>(i)] * dec.sigma[static_cast<size_t>(i)];
    // Left vectors, flipped: Y u_i.
    for (int r = 0; r < n; ++r) w[static_cast<size_t>(r)] = dec.u(n - 1 - r, i);
    h.apply(w, hw);
    h.apply(hw, hhw);
    double dev = 0.0;
    for (int r = 0; r < n; ++r)
      dev += (hhw[static_cast<size_t>(r)] - lam2 * w[static_cast<size_t>(r)]) *
             (hhw[static_cast<size_t>(r)] - lam2 * w[static_cast<size_t>(r)]);
    res.left_max = std::max(res.left_max, std::sqrt(dev));
    // Right vectors as-is.
    for (int r = 0; r < n; ++r) w[static_cast<size_t>(r)] = dec.v(r, i);
    h.apply(w, hw);
    h.apply(hw, hhw);
    dev = 0.0;
    for (int r = 0; r < n; ++r)
      dev += (hhw[static_cast<size_t>(r)] - lam2 * w[static_cast<size_t>(r)]) *
             (hhw[static_cast<size_t>(r)] - lam2 * w[static_cast<size_t>(r)]);
    res.right_max = std::max(res.right_max, std::sqrt(dev));
  }
  return res;
}

}  // namespace fliptoep
