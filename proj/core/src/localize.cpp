#include "fliptoep/localize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace fliptoep {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kHullSamples = 8192;
constexpr int kAbsSamples = 4096;

struct Pt {
  double x, y;
};

double cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Monotone-chain convex hull; returns the closed polygon (no repeated end).
std::vector<Pt> convex_hull(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Pt& a, const Pt& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  const size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Pt> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  const size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

double dist_point_segment(const Pt& p, const Pt& a, const Pt& b) {
  const double vx = b.x - a.x, vy = b.y - a.y;
  const double wx = p.x - a.x, wy = p.y - a.y;
  const double vv = vx * vx + vy * vy;
  double t = vv > 0.0 ? (wx * vx + wy * vy) / vv : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double dx = p.x - (a.x + t * vx), dy = p.y - (a.y + t * vy);
  return std::hypot(dx, dy);
}

bool inside_hull(const Pt& p, const std::vector<Pt>& hull) {
  if (hull.size() < 3) return false;
  for (size_t i = 0; i < hull.size(); ++i) {
    const Pt& a = hull[i];
    const Pt& b = hull[(i + 1) % hull.size()];
    if (cross(a, b, p) < 0) return false;  // hull is counterclockwise
  }
  return true;
}

}  // namespace

double hull_distance(const SymbolSpec& spec) {
  if (spec.is_real()) {
    const RangeInfo ri = range_info(spec);
    if (ri.inf_f <= 0.0 && ri.sup_f >= 0.0) return 0.0;
    return std::min(std::abs(ri.inf_f), std::abs(ri.sup_f));
  }
  std::vector<Pt> pts;
  pts.reserve(kHullSamples + 1);
  const double lo = spec.extension() == Extension::even ? -kPi : spec.domain_lo();
  const double hi = spec.extension() == Extension::even ? kPi : spec.domain_hi();
  for (int j = 0; j <= kHullSamples; ++j) {
    const std::complex<double> v = spec.eval(lo + (hi - lo) * j / kHullSamples);
    pts.push_back({v.real(), v.imag()});
  }
  const std::vector<Pt> hull = convex_hull(std::move(pts));
  const Pt origin{0.0, 0.0};
  if (hull.empty()) return 0.0;
  if (hull.size() == 1) return std::hypot(hull[0].x, hull[0].y);
  if (inside_hull(origin, hull)) return 0.0;
  double d = std::numeric_limits<double>::infinity();
  if (hull.size() == 2) return dist_point_segment(origin, hull[0], hull[1]);
  for (size_t i = 0; i < hull.size(); ++i)
    d = std::min(d, dist_point_segment(origin, hull[i], hull[(i + 1) % hull.size()]));
  return d;
}

std::pair<double, double> abs_range(const SymbolSpec& spec) {
  if (spec.is_real()) {
    const RangeInfo ri = range_info(spec);
    return {ri.inf_absf, ri.sup_absf};
  }
  // Dense |f| sampling per declared piece with golden-section polish around
  // the sampled extremes.
  double lo_best = std::numeric_limits<double>::infinity();
  double hi_best = 0.0;
  for (const auto& piece : spec.pieces()) {
    auto g = [&](double x) { return std::abs(piece.expr.eval(x)); };
    const int ns = std::max(64, static_cast<int>(std::ceil(
                                    kAbsSamples * (piece.hi - piece.lo) / (2.0 * kPi))));
    int arg_lo = 0, arg_hi = 0;
    std::vector<double> vals(static_cast<size_t>(ns) + 1);
    for (int j = 0; j <= ns; ++j) {
      const double x = piece.lo + (piece.hi - piece.lo) * j / ns;
      vals[static_cast<size_t>(j)] = g(x);
      if (vals[static_cast<size_t>(j)] < vals[static_cast<size_t>(arg_lo)]) arg_lo = j;
      if (vals[static_cast<size_t>(j)] > vals[static_cast<size_t>(arg_hi)]) arg_hi = j;
    }
    const double h = (piece.hi - piece.lo) / ns;
    auto refine = [&](int arg, bool want_max) {
      double a = std::max(piece.lo, piece.lo + (arg - 1) * h);
      double b = std::min(piece.hi, piece.lo + (arg + 1) * h);
      const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
      double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
      double g1 = g(x1), g2 = g(x2);
      while (b - a > 1e-12) {
        const bool left = want_max ? (g1 > g2) : (g1 < g2);
        if (left) {
          b = x2;
          x2 = x1;
          g2 = g1;
          x1 = b - phi * (b - a);
          g1 = g(x1);
        } else {
          a = x1;
          x1 = x2;
          g1 = g2;
          x2 = a + phi * (b - a);
          g2 = g(x2);
        }
      }
      return g(0.5 * (a + b));
    };
    lo_best = std::min(lo_best, refine(arg_lo, false));
    hi_best = std::max(hi_best, refine(arg_hi, true));
  }
  if (spec.extension() == Extension::even) {
    // |f| on [-pi,0) mirrors [0,pi]; nothing further to scan.
  }
  return {lo_best, hi_best};
}

namespace {

// |f| counts as a.e. constant when its sample variance over 4096 points is
// at noise level; piecewise-analytic symbols make exact constancy detectable.
bool abs_constant(const SymbolSpec& spec) {
  const double lo = spec.extension() == Extension::even ? 0.0 : spec.domain_lo();
  const double hi = spec.extension() == Extension::even ? kPi : spec.domain_hi();
  double mean = 0.0, mean_sq = 0.0;
  for (int j = 0; j < kAbsSamples; ++j) {
    const double v = std::abs(spec.eval(lo + (hi - lo) * (j + 0.5) / kAbsSamples));
    mean += v;
    mean_sq += v * v;
  }
  mean /= kAbsSamples;
  mean_sq /= kAbsSamples;
  return mean_sq - mean * mean <= 1e-18;
}

}  // namespace

LocalizationReport make_localization_report(const SymbolSpec& spec) {
  LocalizationReport rep;
  rep.d = hull_distance(spec);
  const auto [mabs, Mabs] = abs_range(spec);
  rep.m_absf = mabs;
  rep.M_absf = Mabs;
  if (const auto& tp = spec.trig_poly()) {
    rep.r = tp->degree;
    rep.outlier_budget = 2 * tp->degree;
  }
  rep.abs_f_constant = abs_constant(spec);
  return rep;
}

namespace {

LocalizationReport check_values(const SymbolSpec& spec, std::span<const double> values) {
  LocalizationReport rep = make_localization_report(spec);
  rep.n = static_cast<int>(values.size());
  const double tol = 1e-9 * std::max(1.0, rep.M_absf);
  double top = 0.0;
  for (double v : values) {
    const double av = std::abs(v);
    top = std::max(top, av);
    Verdict verdict;
    if (av > rep.M_absf + tol || av < rep.d - tol) {
      verdict = Verdict::violation;
    } else if (rep.r && av < rep.m_absf - tol) {
      verdict = Verdict::outlier;
    } else {
      // Without a polynomial degree there is no outlier budget; anything in
      // [d, M_|f|] counts as inside.
      verdict = Verdict::inside;
    }
    rep.verdicts.push_back(verdict);
    rep.inside_count += verdict == Verdict::inside;
    rep.outlier_count += verdict == Verdict::outlier;
    rep.violation_count += verdict == Verdict::violation;
  }
  if (!rep.abs_f_constant && !values.empty()) rep.strict_ok = top < rep.M_absf;
  return rep;
}

}  // namespace

LocalizationReport check_singular_localization(const SymbolSpec& spec,
                                               std::span<const double> singular_values) {
  return check_values(spec, singular_values);
}

LocalizationReport check_flipped_localization(const SymbolSpec& spec,
                                              std::span<const double> flipped_eigenvalues) {
  return check_values(spec, flipped_eigenvalues);
}

}  // namespace fliptoep
