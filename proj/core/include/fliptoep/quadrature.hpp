#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace fliptoep {

template <class T>
struct QuadResult {
  T value{};
  double err_estimate = 0.0;
  bool converged = true;
};

namespace detail {

inline double qmag(double x) { return std::abs(x); }
inline double qmag(const std::complex<double>& x) { return std::abs(x); }

// Classic adaptive Simpson with Richardson extrapolation at the leaves.
// `osc` is a frequency hint: subintervals are force-split until they span at
// most a quarter period, which prevents the |S2-S1| test from accepting an
// aliased sample of an oscillatory integrand.
template <class T, class F>
void simpson_rec(const F& f, double a, double b, T fa, T fm, T fb, T s, double tol, int depth,
                 int max_depth, double osc, QuadResult<T>& out) {
  const double m = 0.5 * (a + b);
  const double h = b - a;
  const T flm = f(0.5 * (a + m));
  const T frm = f(0.5 * (m + b));
  // Each child sum uses that child's exact width; the rounded midpoint makes
  // (m - a) differ from h/2 by up to half an ulp of a+b, which would
  // otherwise leave a constant absolute mismatch in S2 - S1 at deep levels.
  const T sl = ((m - a) / 6.0) * (fa + 4.0 * flm + fm);
  const T sr = ((b - m) / 6.0) * (fm + 4.0 * frm + fb);
  const T s2 = sl + sr;
  const bool forced = depth < max_depth && osc > 0.0 && h * osc > 0.5 * std::numbers::pi;
  const double err = qmag(s2 - s) / 15.0;
  // Once |S2-S1| sits at the rounding floor of the local sum, refinement
  // cannot improve the estimate; accept regardless of the leaf budget.
  const double abs_scale =
      (h / 12.0) * (qmag(fa) + 4.0 * (qmag(flm) + qmag(frm)) + 2.0 * qmag(fm) + qmag(fb));
  const bool at_floor = err <= 4e-15 * abs_scale;
  if (!forced && (err <= tol || at_floor || depth >= max_depth)) {
    out.value += s2 + (s2 - s) / 15.0;
    out.err_estimate += err;
    if (err > tol && !at_floor && depth >= max_depth) out.converged = false;
    return;
  }
  simpson_rec(f, a, m, fa, flm, fm, sl, 0.5 * tol, depth + 1, max_depth, osc, out);
  simpson_rec(f, m, b, fm, frm, fb, sr, 0.5 * tol, depth + 1, max_depth, osc, out);
}

}  // namespace detail

/// Integrates f over [a,b] to absolute tolerance abs_tol. T is double or
/// complex<double>. Non-convergence is reported via the flag, not thrown.
template <class T, class F>
QuadResult<T> adaptive_simpson(const F& f, double a, double b, double abs_tol, int max_depth = 40,
                               double osc = 0.0) {
  QuadResult<T> out;
  if (a == b) return out;
  const double m = 0.5 * (a + b);
  const T fa = f(a);
  const T fm = f(m);
  const T fb = f(b);
  const T s = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
  detail::simpson_rec(f, a, b, fa, fm, fb, s, abs_tol, 0, max_depth, osc, out);
  return out;
}

}  // namespace fliptoep
