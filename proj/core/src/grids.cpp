#include "fliptoep/grids.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "fliptoep/errors.hpp"

namespace fliptoep {

namespace {
constexpr double kPi = std::numbers::pi;
}

double uniformity_measure(std::span<const double> points, double a, double b) {
  if (points.empty()) throw std::invalid_argument("uniformity_measure: empty grid");
  const double d = static_cast<double>(points.size());
  double m = 0.0;
  for (size_t i = 0; i < points.size(); ++i) {
    const double ref = a + (static_cast<double>(i) + 1.0) * (b - a) / (d + 1.0);
    m = std::max(m, std::abs(points[i] - ref));
  }
  return m;
}

Grid make_grid(std::vector<double> points, double a, double b) {
  Grid g;
  g.m = uniformity_measure(points, a, b);
  g.points = std::move(points);
  g.a = a;
  g.b = b;
  return g;
}

Grid uniform_grid(int n, double a, double b) {
  std::vector<double> pts(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) pts[static_cast<size_t>(i - 1)] = a + i * (b - a) / (n + 1.0);
  return make_grid(std::move(pts), a, b);
}

SupMatch sorted_sup_match(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("sorted_sup_match: size mismatch");
  const size_t n = a.size();
  std::vector<int> ia(n), ib(n);
  std::iota(ia.begin(), ia.end(), 0);
  std::iota(ib.begin(), ib.end(), 0);
  std::stable_sort(ia.begin(), ia.end(),
                   [&](int x, int y) { return a[static_cast<size_t>(x)] < a[static_cast<size_t>(y)]; });
  std::stable_sort(ib.begin(), ib.end(),
                   [&](int x, int y) { return b[static_cast<size_t>(x)] < b[static_cast<size_t>(y)]; });
  SupMatch out;
  out.perm.assign(n, 0);
  for (size_t r = 0; r < n; ++r) {
    const int x = ia[r];
    const int y = ib[r];
    out.perm[static_cast<size_t>(x)] = y;
    out.max_dev = std::max(out.max_dev,
                           std::abs(a[static_cast<size_t>(x)] - b[static_cast<size_t>(y)]));
  }
  return out;
}

namespace {

// Per-class slot indices of the interleaved ordering (0-based): symmetric
// eigenvectors sit at even slots, skew at odd ones.
std::vector<int> class_slots(int n, SymClass c) {
  std::vector<int> slots;
  for (int i = (c == SymClass::symmetric ? 0 : 1); i < n; i += 2) slots.push_back(i);
  return slots;
}

std::vector<int> class_record_indices(const SpectralPairing& p, SymClass c) {
  std::vector<int> idx;
  for (size_t i = 0; i < p.records.size(); ++i)
    if (p.records[i].cls == c) idx.push_back(static_cast<int>(i));
  return idx;
}

bool sampled_even(const SymbolSpec& spec) {
  if (spec.extension() == Extension::even) return true;
  double dev = 0.0, scale = 1.0;
  for (int j = 1; j <= 64; ++j) {
    const double x = kPi * j / 65.0;
    const double va = spec.eval_real(x);
    const double vb = spec.eval_real(-x);
    dev = std::max(dev, std::abs(va - vb));
    scale = std::max(scale, std::abs(va));
  }
  return dev <= 1e-12 * scale;
}

}  // namespace

MatchReport match_Mn(const SpectralPairing& pairing, const SymbolSpec& spec, const Grid& grid) {
  const int n = pairing.n;
  if (static_cast<int>(grid.points.size()) != n)
    throw std::invalid_argument("match_Mn: grid size differs from matrix order");
  if (!spec.is_real() || !sampled_even(spec))
    throw std::invalid_argument("match_Mn: symbol must be real and even");

  MatchReport rep;
  rep.n = n;
  rep.grid = grid;
  rep.fvals.assign(static_cast<size_t>(n), 0.0);
  rep.lam.assign(static_cast<size_t>(n), 0.0);
  rep.deviations.assign(static_cast<size_t>(n), 0.0);
  rep.ordering.assign(static_cast<size_t>(n), 0);

  for (SymClass c : {SymClass::symmetric, SymClass::skew}) {
    const std::vector<int> slots = class_slots(n, c);
    const std::vector<int> recs = class_record_indices(pairing, c);
    std::vector<double> fv(slots.size());
    for (size_t i = 0; i < slots.size(); ++i)
      fv[i] = spec.eval_real(grid.points[static_cast<size_t>(slots[i])]);
    std::vector<double> lam(recs.size());
    for (size_t i = 0; i < recs.size(); ++i)
      lam[i] = pairing.records[static_cast<size_t>(recs[i])].lamT;
    const SupMatch sm = sorted_sup_match(fv, lam);
    for (size_t i = 0; i < slots.size(); ++i) {
      const int slot = slots[i];
      const int rec = recs[static_cast<size_t>(sm.perm[i])];
      rep.fvals[static_cast<size_t>(slot)] = fv[i];
      rep.lam[static_cast<size_t>(slot)] = pairing.records[static_cast<size_t>(rec)].lamT;
      rep.deviations[static_cast<size_t>(slot)] =
          std::abs(fv[i] - rep.lam[static_cast<size_t>(slot)]);
      rep.ordering[static_cast<size_t>(slot)] = rec;
    }
  }
  rep.Mn = *std::max_element(rep.deviations.begin(), rep.deviations.end());
  return rep;
}

// ---------------------------------------------------------------------------
// Exact grid recovery

namespace {

// Preimage of level v on a monotone piece, by bisection on the owning
// declared piece's expression. Levels at or beyond the value range clamp to
// the matching end.
double bisect_preimage(const SymbolSpec& spec, const MonotonePiece& mp, double v) {
  const Expr& expr = spec.pieces()[static_cast<size_t>(mp.declared_piece)].expr;
  auto g = [&](double x) { return expr.eval_real(x); };
  const bool inc = mp.v_hi >= mp.v_lo;
  double lo = mp.lo, hi = mp.hi;
  if ((inc && v <= mp.v_lo) || (!inc && v >= mp.v_lo)) return mp.lo;
  if ((inc && v >= mp.v_hi) || (!inc && v <= mp.v_hi)) return mp.hi;
  for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if ((inc && gm < v) || (!inc && gm > v))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ExactGridResult exact_grid(const SpectralPairing& pairing, const SymbolSpec& spec,
                           const RangeInfo* info) {
  if (!spec.is_real() || !sampled_even(spec))
    throw std::invalid_argument("exact_grid: symbol must be real and even");
  RangeInfo local;
  if (info == nullptr) {
    local = range_info(spec);
    info = &local;
  }
  const int n = pairing.n;
  double norm_t = 1.0;
  for (const auto& r : pairing.records) norm_t = std::max(norm_t, std::abs(r.lamT));
  const double const_cap = 1e-10 * norm_t;  // deviation budget on constant pieces
  const double memb_tol = 1e-9;             // preimage existence tolerance

  std::vector<double> grid_points(static_cast<size_t>(n), 0.0);
  std::vector<double> fvals(static_cast<size_t>(n), 0.0);
  std::vector<double> lam(static_cast<size_t>(n), 0.0);
  std::vector<int> ordering(static_cast<size_t>(n), 0);

  for (SymClass c : {SymClass::symmetric, SymClass::skew}) {
    const std::vector<int> slots = class_slots(n, c);
    const int m = static_cast<int>(slots.size());
    if (m == 0) continue;

    const std::vector<int> recs = class_record_indices(pairing, c);
    const std::vector<MonotonePiece>& pieces = info->monotone;

    // Reference samples of the class's own slots, each owned by the monotone
    // piece containing it.
    struct RefSample {
      double fval;
      double x;
      size_t piece;
    };
    std::vector<RefSample> refs;
    refs.reserve(static_cast<size_t>(m));
    for (int slot : slots) {
      const double x = (slot + 1) * kPi / (n + 1.0);
      size_t owner = pieces.size() - 1;
      for (size_t p = 0; p < pieces.size(); ++p)
        if (x >= pieces[p].lo && (x < pieces[p].hi || p + 1 == pieces.size())) {
          owner = p;
          break;
        }
      const double fv =
          spec.pieces()[static_cast<size_t>(pieces[owner].declared_piece)].expr.eval_real(x);
      refs.push_back({fv, x, owner});
    }
    std::stable_sort(refs.begin(), refs.end(), [](const RefSample& a, const RefSample& b) {
      return a.fval < b.fval || (a.fval == b.fval && a.x < b.x);
    });

    // Rank-match the ascending class eigenvalues to the sorted reference
    // samples: each eigenvalue seeks its preimage on the piece whose uniform
    // sample it replaces. Eigenvalues whose matched piece cannot hold them
    // fall back to the containing piece with the preimage nearest to the
    // matched reference point.
    struct ClassPoint {
      double x;
      int rec_idx;
      int declared_piece;
    };
    std::vector<ClassPoint> points;
    points.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      const int rec_idx = recs[static_cast<size_t>(i)];
      const double v = pairing.records[static_cast<size_t>(rec_idx)].lamT;
      const RefSample& ref = refs[static_cast<size_t>(i)];
      const MonotonePiece& home = pieces[ref.piece];

      bool placed = false;
      if (home.dir == Monotonicity::constant) {
        // Every point of a flat piece is a preimage of its value; keeping the
        // reference position realizes an even spread over the allotted slots.
        if (std::abs(v - home.v_lo) <= const_cap) {
          points.push_back({ref.x, rec_idx, home.declared_piece});
          placed = true;
        }
      } else if (v >= home.vmin() - memb_tol && v <= home.vmax() + memb_tol) {
        const double x = bisect_preimage(spec, home, v);
        const double fx =
            spec.pieces()[static_cast<size_t>(home.declared_piece)].expr.eval_real(x);
        if (std::abs(fx - v) <= const_cap) {
          points.push_back({x, rec_idx, home.declared_piece});
          placed = true;
        }
      }
      if (!placed) {
        // Greedy nearest-reference assignment among pieces that do contain v.
        double best_x = 0.0;
        int best_piece = -1;
        double best_dist = std::numeric_limits<double>::infinity();
        for (const MonotonePiece& mp : pieces) {
          double x;
          if (mp.dir == Monotonicity::constant) {
            if (std::abs(v - mp.v_lo) > const_cap) continue;
            x = std::clamp(ref.x, mp.lo, mp.hi);
          } else {
            if (v < mp.vmin() - memb_tol || v > mp.vmax() + memb_tol) continue;
            x = bisect_preimage(spec, mp, v);
            const double fx =
                spec.pieces()[static_cast<size_t>(mp.declared_piece)].expr.eval_real(x);
            if (std::abs(fx - v) > const_cap) continue;
          }
          const double dist = std::abs(x - ref.x);
          if (dist < best_dist) {
            best_dist = dist;
            best_x = x;
            best_piece = mp.declared_piece;
          }
        }
        if (best_piece < 0)
          throw NumericError("exact_grid: eigenvalue " + std::to_string(v) +
                             " has no preimage under the symbol on [0,pi]");
        points.push_back({best_x, rec_idx, best_piece});
      }
    }
    std::stable_sort(points.begin(), points.end(),
                     [](const ClassPoint& a, const ClassPoint& b) { return a.x < b.x; });

    // Ascending positions fill the class slots in slot order.
    for (int i = 0; i < m; ++i) {
      const int slot = slots[static_cast<size_t>(i)];
      const ClassPoint& cp = points[static_cast<size_t>(i)];
      const auto& rec = pairing.records[static_cast<size_t>(cp.rec_idx)];
      grid_points[static_cast<size_t>(slot)] = cp.x;
      lam[static_cast<size_t>(slot)] = rec.lamT;
      ordering[static_cast<size_t>(slot)] = cp.rec_idx;
      fvals[static_cast<size_t>(slot)] =
          spec.pieces()[static_cast<size_t>(cp.declared_piece)].expr.eval_real(cp.x);
    }
  }

  ExactGridResult out;
  out.grid = make_grid(std::move(grid_points), 0.0, kPi);
  out.report.n = n;
  out.report.grid = out.grid;
  out.report.fvals = std::move(fvals);
  out.report.lam = std::move(lam);
  out.report.deviations.assign(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i)
    out.report.deviations[static_cast<size_t>(i)] =
        std::abs(out.report.fvals[static_cast<size_t>(i)] - out.report.lam[static_cast<size_t>(i)]);
  out.report.Mn = *std::max_element(out.report.deviations.begin(), out.report.deviations.end());
  out.report.ordering = std::move(ordering);
  return out;
}

}  // namespace fliptoep
