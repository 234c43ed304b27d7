#pragma once

#include <span>
#include <vector>

#include "fliptoep/spectra.hpp"
#include "fliptoep/symbol.hpp"

namespace fliptoep {

/// A grid of d points in [a,b] with its uniformity measure
/// m = max_i |x_i - (a + i (b-a)/(d+1))|.
struct Grid {
  std::vector<double> points;
  double a = 0.0;
  double b = 0.0;
  double m = 0.0;
};

/// The uniformity measure of an indexed grid. Throws on an empty grid.
double uniformity_measure(std::span<const double> points, double a, double b);

/// Bundles points with their measure.
Grid make_grid(std::vector<double> points, double a, double b);

/// Evenly spaced reference grid i(b-a)/(n+1), i = 1..n, shifted to a.
Grid uniform_grid(int n, double a, double b);

struct SupMatch {
  double max_dev = 0.0;
  std::vector<int> perm;  // perm[i] = index into B paired with A[i]
};

/// Pairs two equally sized multisets rank-to-rank after sorting; the achieved
/// sup deviation equals the minimum over all permutations.
SupMatch sorted_sup_match(std::span<const double> a, std::span<const double> b);

/// Result of matching eigenvalues to symbol samples (or recovered preimages).
/// Slot i (0-based) of the interleaved ordering carries grid point
/// grid.points[i], symbol value fvals[i], eigenvalue lam[i], and
/// deviations[i] = |fvals[i] - lam[i]|. ordering[i] is the index of the
/// pairing record assigned to slot i; it maps odd slots to symmetric records
/// and even slots to skew records.
struct MatchReport {
  int n = 0;
  Grid grid;
  std::vector<double> fvals;
  std::vector<double> lam;
  std::vector<double> deviations;
  double Mn = 0.0;
  std::vector<int> ordering;
};

/// M_n for a given a.u. grid: symmetric-class eigenvalues are matched to the
/// odd-index subgrid samples and skew-class ones to the even-index subgrid,
/// each by sorted matching.
MatchReport match_Mn(const SpectralPairing& pairing, const SymbolSpec& spec, const Grid& grid);

struct ExactGridResult {
  Grid grid;
  MatchReport report;
};

/// Recovers a grid with f(x_i) = lamT_i within tolerance by routing each
/// eigenvalue to a monotone piece of f and solving for a preimage by
/// bisection. Throws NumericError when an eigenvalue has no preimage.
ExactGridResult exact_grid(const SpectralPairing& pairing, const SymbolSpec& spec,
                           const RangeInfo* info = nullptr);

}  // namespace fliptoep
