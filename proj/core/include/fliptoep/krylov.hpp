#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fliptoep/matgen.hpp"

namespace fliptoep {

/// Matrix-free symmetric operator.
struct SymOp {
  int n = 0;
  std::function<void(std::span<const double>, std::span<double>)> apply;
};

struct SolveTrace {
  int n = 0;
  int iterations = 0;
  std::vector<double> relres;  // ||r_k|| / ||r_0||, k = 1..iterations
  bool converged = false;
  bool breakdown = false;
  double tol = 0.0;
  double back_residual = -1.0;  // ||T x - b|| / ||b||, filled by flip_solve
  std::vector<double> bound;    // optional predicted bound curve
  bool bound_unbounded = false;
  std::vector<double> x;
};

/// MINRES (Lanczos + Givens) for a symmetric operator. Residual norms come
/// from the rotation recurrence and are non-increasing by construction.
/// Symmetry is spot-checked on random probes before iterating.
SolveTrace minres(const SymOp& a, std::span<const double> b, double tol, int max_it);

/// Solves T x = b for real nonsymmetric Toeplitz T by flipping both sides:
/// (Y T) x = Y b is symmetric and handled by MINRES. The returned trace
/// carries the back-substituted residual of the original system.
SolveTrace flip_solve(const ToeplitzMatrix& t, std::span<const double> b, double tol);

/// Standard MINRES residual bound for spectra in [-M,-d] u [d,M]:
/// 2 ((M-d)/(M+d))^{floor(k/2)}. Returns 2 when d = 0 (vacuous).
double predict_bound(double d, double m, int k);

/// Fills trace.bound with predict_bound(d, M, k) for each recorded iterate.
void attach_bound(SolveTrace& trace, double d, double m);

}  // namespace fliptoep
