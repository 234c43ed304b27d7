#include "fliptoep/krylov.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "fliptoep/dense.hpp"
#include "fliptoep/errors.hpp"

namespace fliptoep {

namespace {

void check_symmetry(const SymOp& a) {
  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> dist;
  const int n = a.n;
  std::vector<double> x(static_cast<size_t>(n)), y(static_cast<size_t>(n)),
      ax(static_cast<size_t>(n)), ay(static_cast<size_t>(n));
  for (int probe = 0; probe < 2; ++probe) {
    for (auto& v : x) v = dist(rng);
    for (auto& v : y) v = dist(rng);
    a.apply(x, ax);
    a.apply(y, ay);
    const double xay = dot(x, ay);
    const double yax = dot(y, ax);
    const double scale =
        std::max(1e-300, std::max(norm2(ax) / std::max(1e-300, norm2(x)),
                                  norm2(ay) / std::max(1e-300, norm2(y))));
    if (std::abs(xay - yax) > 1e-10 * scale * norm2(x) * norm2(y))
      throw std::invalid_argument("minres: operator is not symmetric");
  }
}

}  // namespace

SolveTrace minres(const SymOp& a, std::span<const double> b, double tol, int max_it) {
  const int n = a.n;
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("minres: size mismatch");
  check_symmetry(a);

  SolveTrace trace;
  trace.n = n;
  trace.tol = tol;
  trace.x.assign(static_cast<size_t>(n), 0.0);

  const double beta1 = norm2(b);
  if (beta1 == 0.0) {
    trace.converged = true;
    return trace;
  }

  std::vector<double> v(b.begin(), b.end());
  for (double& t : v) t /= beta1;
  std::vector<double> v_old(static_cast<size_t>(n), 0.0);
  std::vector<double> p(static_cast<size_t>(n), 0.0);
  std::vector<double> w1(static_cast<size_t>(n), 0.0);  // w_{k-1}
  std::vector<double> w2(static_cast<size_t>(n), 0.0);  // w_{k-2}

  double beta = 0.0;  // beta_k entering the iteration
  double eta = beta1;
  double c0 = 1.0, c1 = 1.0, s0 = 0.0, s1 = 0.0;
  double norm_est = 0.0;

  for (int k = 1; k <= max_it; ++k) {
    a.apply(v, p);
    const double alpha = dot(v, p);
    for (int i = 0; i < n; ++i)
      p[static_cast<size_t>(i)] -= alpha * v[static_cast<size_t>(i)] +
                                   beta * v_old[static_cast<size_t>(i)];
    const double beta_next = norm2(p);
    norm_est = std::max({norm_est, std::abs(alpha), beta_next, beta});

    const double delta = c1 * alpha - c0 * s1 * beta;
    const double rho1 = std::hypot(delta, beta_next);
    const double rho2 = s1 * alpha + c0 * c1 * beta;
    const double rho3 = s0 * beta;
    if (rho1 == 0.0) {
      // Reduced system is singular on an invariant subspace; nothing more to
      // gain from this Krylov space.
      trace.breakdown = true;
      break;
    }
    const double c_new = delta / rho1;
    const double s_new = beta_next / rho1;

    for (int i = 0; i < n; ++i) {
      const double wi = (v[static_cast<size_t>(i)] - rho3 * w2[static_cast<size_t>(i)] -
                         rho2 * w1[static_cast<size_t>(i)]) /
                        rho1;
      w2[static_cast<size_t>(i)] = w1[static_cast<size_t>(i)];
      w1[static_cast<size_t>(i)] = wi;
      trace.x[static_cast<size_t>(i)] += c_new * eta * wi;
    }
    eta = -s_new * eta;

    trace.iterations = k;
    const double relres = std::abs(eta) / beta1;
    trace.relres.push_back(relres);
    if (relres <= tol) {
      trace.converged = true;
      break;
    }

    if (beta_next <= 1e-14 * std::max(1.0, norm_est)) {
      // Lanczos breakdown with a nonzero residual: the right-hand side has a
      // component outside the reachable invariant subspace.
      trace.breakdown = true;
      break;
    }

    std::swap(v_old, v);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = p[static_cast<size_t>(i)] / beta_next;
    beta = beta_next;
    c0 = c1;
    c1 = c_new;
    s0 = s1;
    s1 = s_new;
  }
  return trace;
}

SolveTrace flip_solve(const ToeplitzMatrix& t, std::span<const double> b, double tol) {
  if (!t.is_real()) throw std::invalid_argument("flip_solve: requires real coefficients");
  const int n = t.order();
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("flip_solve: size mismatch");

  bool already_symmetric = true;
  for (int k = 1; k < n && already_symmetric; ++k)
    already_symmetric = t.diag_real(k) == t.diag_real(-k);

  SolveTrace trace;
  if (already_symmetric) {
    // Flipping a symmetric system only doubles the eigenvalue clusters;
    // MINRES handles T directly.
    SymOp op{n, [&t](std::span<const double> x, std::span<double> y) { t.apply_real(x, y); }};
    trace = minres(op, b, tol, n + 5);
  } else {
    const FlippedMatrix h = flipped(t);
    SymOp op{n, [&h](std::span<const double> x, std::span<double> y) { h.apply(x, y); }};
    std::vector<double> rhs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rhs[static_cast<size_t>(i)] = b[static_cast<size_t>(n - 1 - i)];
    trace = minres(op, rhs, tol, n + 5);
  }

  // Verify against the original system.
  std::vector<double> tx(static_cast<size_t>(n));
  t.apply_real(trace.x, tx);
  double num = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = tx[static_cast<size_t>(i)] - b[static_cast<size_t>(i)];
    num += d * d;
  }
  const double bn = norm2(b);
  trace.back_residual = bn > 0.0 ? std::sqrt(num) / bn : std::sqrt(num);
  if (trace.converged && trace.back_residual > 10.0 * tol) trace.converged = false;
  return trace;
}

double predict_bound(double d, double m, int k) {
  if (d < 0.0 || m < d) throw std::invalid_argument("predict_bound: need 0 <= d <= M");
  if (d == 0.0) return 2.0;
  const double q = (m - d) / (m + d);
  return 2.0 * std::pow(q, static_cast<double>(k / 2));
}

void attach_bound(SolveTrace& trace, double d, double m) {
  trace.bound.clear();
  trace.bound_unbounded = d == 0.0;
  for (int k = 1; k <= trace.iterations; ++k) trace.bound.push_back(predict_bound(d, m, k));
}

}  // namespace fliptoep
