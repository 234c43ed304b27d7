#include "fliptoep/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fliptoep/errors.hpp"
#include "fliptoep/quadrature.hpp"

namespace fliptoep {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBoundaryTol = 1e-12;

double max_frequency(const Expr& e) {
  double m = 0.0;
  for (const ExprNode& n : e.nodes())
    if (n.op == ExprOp::cos_kt || n.op == ExprOp::sin_kt || n.op == ExprOp::exp_ikt)
      m = std::max(m, std::abs(n.a));
  return m;
}

}  // namespace

SymbolSpec::SymbolSpec(std::vector<Piece> pieces, double domain_lo, double domain_hi,
                       Extension ext, std::string text)
    : pieces_(std::move(pieces)),
      domain_lo_(domain_lo),
      domain_hi_(domain_hi),
      extension_(ext),
      text_(std::move(text)) {
  real_ = true;
  for (const Piece& p : pieces_) real_ = real_ && p.expr.is_real();
  detect_trig_poly();
}

double SymbolSpec::fold(double x) const {
  if (extension_ == Extension::even && x < 0.0) x = -x;
  if (x < domain_lo_) {
    if (x < domain_lo_ - 1e-9) throw std::domain_error("evaluation point outside symbol domain");
    x = domain_lo_;
  }
  if (x > domain_hi_) {
    if (x > domain_hi_ + 1e-9) throw std::domain_error("evaluation point outside symbol domain");
    x = domain_hi_;
  }
  return x;
}

int SymbolSpec::piece_index(double x) const {
  x = fold(x);
  const int m = static_cast<int>(pieces_.size());
  for (int i = 0; i < m; ++i) {
    const Piece& p = pieces_[i];
    if (x < p.hi || (p.closed_hi && x <= p.hi)) return i;
  }
  return m - 1;
}

std::complex<double> SymbolSpec::eval(double x) const {
  x = fold(x);
  return pieces_[static_cast<size_t>(piece_index(x))].expr.eval(x);
}

double SymbolSpec::eval_real(double x) const {
  x = fold(x);
  return pieces_[static_cast<size_t>(piece_index(x))].expr.eval_real(x);
}

void SymbolSpec::detect_trig_poly() {
  trig_.reset();
  std::optional<std::map<int, std::complex<double>>> merged;
  for (const Piece& p : pieces_) {
    auto c = p.expr.trig_coeffs();
    if (!c) return;
    if (!merged) {
      merged = std::move(c);
    } else if (*merged != *c) {
      // Distinct polynomials on sub-pieces do not form a global trig poly.
      return;
    }
  }
  if (!merged) return;
  int deg = 0;
  for (const auto& [k, c] : *merged) deg = std::max(deg, std::abs(k));
  if (extension_ == Extension::even) {
    // The even extension of the restriction equals the polynomial globally
    // only when the coefficients are even.
    for (const auto& [k, c] : *merged) {
      std::complex<double> other{0.0, 0.0};
      auto it = merged->find(-k);
      if (it != merged->end()) other = it->second;
      if (std::abs(c - other) > 1e-14) return;
    }
  }
  TrigPoly tp;
  tp.degree = deg;
  tp.coeffs.assign(static_cast<size_t>(2 * deg + 1), {0.0, 0.0});
  for (const auto& [k, c] : *merged) tp.coeffs[static_cast<size_t>(k + deg)] = c;
  trig_ = std::move(tp);
}

SymbolSpec parse_symbol(const std::string& text, Extension ext) {
  std::vector<ParsedPiece> parsed = parse_pieces(text);

  double lo, hi;
  if (ext == Extension::even) {
    lo = 0.0;
    hi = kPi;
  } else {
    lo = -kPi;
    hi = kPi;
  }

  std::vector<SymbolSpec::Piece> pieces;
  const bool any_interval =
      std::any_of(parsed.begin(), parsed.end(), [](const ParsedPiece& p) { return p.has_interval; });
  if (!any_interval) {
    if (parsed.size() != 1)
      throw ParseError("multiple pieces require explicit 'on' intervals", 0);
    pieces.push_back({parsed[0].expr, lo, hi, true, parsed[0].text});
  } else {
    for (const ParsedPiece& p : parsed) {
      if (!p.has_interval)
        throw ParseError("all pieces must carry 'on' intervals when any does", 0);
      pieces.push_back({p.expr, p.lo, p.hi, p.closed_hi, p.text});
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const auto& a, const auto& b) { return a.lo < b.lo; });
    if (std::abs(pieces.front().lo - lo) > kBoundaryTol)
      throw ParseError("piece intervals do not start at the base domain's left end", 0);
    for (size_t i = 0; i + 1 < pieces.size(); ++i) {
      if (std::abs(pieces[i].hi - pieces[i + 1].lo) > kBoundaryTol)
        throw ParseError(pieces[i].hi < pieces[i + 1].lo ? "gap between piece intervals"
                                                         : "overlapping piece intervals",
                         0);
      if (pieces[i].closed_hi)
        throw ParseError("overlapping piece intervals (interior boundary closed on both sides)", 0);
      pieces[i].hi = pieces[i + 1].lo;
    }
    if (std::abs(pieces.back().hi - hi) > kBoundaryTol || !pieces.back().closed_hi)
      throw ParseError("piece intervals do not cover the base domain", 0);
    pieces.back().hi = hi;
  }

  SymbolSpec spec(std::move(pieces), lo, hi, ext, text);

  // Reject expressions that blow up on their piece (e.g. division by a factor
  // vanishing on the domain is not expressible, but guard against inf/nan).
  for (const SymbolSpec::Piece& p : spec.pieces()) {
    for (int j = 0; j <= 64; ++j) {
      double x = p.lo + (p.hi - p.lo) * j / 64.0;
      std::complex<double> v = p.expr.eval(x);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw ParseError("expression is unbounded on its piece", 0);
    }
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Fourier coefficients

FourierCoeffs fourier_coeffs(const SymbolSpec& spec, int K, double tol) {
  if (K < 0) throw std::invalid_argument("fourier_coeffs: K must be >= 0");
  FourierCoeffs out;
  out.k_min = -K;
  out.k_max = K;
  out.values.assign(static_cast<size_t>(2 * K + 1), {0.0, 0.0});

  if (const auto& tp = spec.trig_poly()) {
    for (int k = -K; k <= K; ++k) out.values[static_cast<size_t>(k + K)] = tp->at(k);
    out.trig_degree = tp->degree;
  } else {
    double worst = 0.0;
    bool ok = true;
    const auto& pieces = spec.pieces();
    if (spec.extension() == Extension::even) {
      // f_k = (1/pi) * int_0^pi f(x) cos(kx) dx, f_{-k} = f_k.
      for (int k = 0; k <= K; ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (const auto& p : pieces) {
          const double osc = k + max_frequency(p.expr);
          if (spec.is_real()) {
            auto r = adaptive_simpson<double>(
                [&](double x) { return p.expr.eval_real(x) * std::cos(k * x); }, p.lo, p.hi, tol,
                40, osc);
            acc += r.value;
            worst = std::max(worst, r.err_estimate);
            ok = ok && r.converged;
          } else {
            auto r = adaptive_simpson<std::complex<double>>(
                [&](double x) { return p.expr.eval(x) * std::cos(k * x); }, p.lo, p.hi, tol, 40,
                osc);
            acc += r.value;
            worst = std::max(worst, r.err_estimate);
            ok = ok && r.converged;
          }
        }
        acc /= kPi;
        out.values[static_cast<size_t>(k + K)] = acc;
        out.values[static_cast<size_t>(-k + K)] = acc;
      }
    } else {
      // f_k = (1/2pi) * int_{-pi}^{pi} f(x) e^{-ikx} dx, per piece.
      for (int k = -K; k <= K; ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (const auto& p : pieces) {
          const double osc = std::abs(k) + max_frequency(p.expr);
          auto r = adaptive_simpson<std::complex<double>>(
              [&](double x) {
                return p.expr.eval(x) * std::complex<double>(std::cos(k * x), -std::sin(k * x));
              },
              p.lo, p.hi, tol, 40, osc);
          acc += r.value;
          worst = std::max(worst, r.err_estimate);
          ok = ok && r.converged;
        }
        out.values[static_cast<size_t>(k + K)] = acc / (2.0 * kPi);
      }
    }
    if (!ok) throw QuadratureError("fourier_coeffs: quadrature did not converge", worst);
  }

  double max_imag = 0.0, max_asym = 0.0;
  for (int k = -K; k <= K; ++k) {
    max_imag = std::max(max_imag, std::abs(out.at(k).imag()));
    max_asym = std::max(max_asym, std::abs(out.at(k) - out.at(-k)));
  }
  out.real_flag = max_imag <= out.tol_coeff;
  out.even_flag = max_asym <= out.tol_coeff;
  return out;
}

// ---------------------------------------------------------------------------
// Range info and the monotone decomposition

namespace {

// Golden-section search for an extremum of g within [a,b]; maximize when
// want_max, else minimize. Returns the abscissa.
template <class G>
double golden_section(const G& g, double a, double b, bool want_max, double xtol = 1e-13) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double g1 = g(x1), g2 = g(x2);
  while (b - a > xtol) {
    const bool move_left = want_max ? (g1 > g2) : (g1 < g2);
    if (move_left) {
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
  return 0.5 * (a + b);
}

}  // namespace

RangeInfo range_info(const SymbolSpec& spec) {
  if (!spec.is_real())
    throw std::invalid_argument("range_info: symbol is not real-valued; use hull_distance");

  RangeInfo out;
  out.sample_density = static_cast<int>(std::ceil(4096.0 / kPi));

  // Monotone decomposition of [0,pi], one declared piece at a time. Each DSL
  // piece is analytic, so it is either constant throughout or has isolated
  // extrema detectable from sampled finite differences.
  const auto& pieces = spec.pieces();
  const double analysis_lo = 0.0;
  const double analysis_hi = kPi;
  for (size_t pi_idx = 0; pi_idx < pieces.size(); ++pi_idx) {
    const auto& p = pieces[pi_idx];
    const double lo = std::max(p.lo, analysis_lo);
    const double hi = std::min(p.hi, analysis_hi);
    if (hi <= lo) continue;
    auto g = [&](double x) { return p.expr.eval_real(x); };

    const int ns = std::max(16, static_cast<int>(std::ceil(4096.0 * (hi - lo) / kPi)));
    std::vector<double> xs(static_cast<size_t>(ns) + 1), vs(static_cast<size_t>(ns) + 1);
    for (int j = 0; j <= ns; ++j) {
      xs[static_cast<size_t>(j)] = lo + (hi - lo) * j / ns;
      vs[static_cast<size_t>(j)] = g(xs[static_cast<size_t>(j)]);
    }
    double scale = 1.0;
    for (double v : vs) scale = std::max(scale, std::abs(v));

    bool constant = true;
    for (int j = 1; j <= ns; ++j)
      if (std::abs(vs[static_cast<size_t>(j)] - vs[0]) > 1e-13 * scale) {
        constant = false;
        break;
      }
    if (constant) {
      out.monotone.push_back(
          {lo, hi, Monotonicity::constant, vs.front(), vs.back(), static_cast<int>(pi_idx)});
      continue;
    }

    // Sign runs of the finite differences; zero differences only occur in a
    // thin band around an extremum and are skipped.
    std::vector<double> bounds{lo};
    int prev_sign = 0;
    int prev_idx = 0;
    for (int j = 0; j < ns; ++j) {
      double d = vs[static_cast<size_t>(j + 1)] - vs[static_cast<size_t>(j)];
      int s = (d > 0) - (d < 0);
      if (s == 0) continue;
      if (prev_sign != 0 && s != prev_sign) {
        // Extremum between the previous run's last rising/falling gap and the
        // start of the new run; refine to the abscissa.
        double a = xs[static_cast<size_t>(prev_idx)];
        double b = xs[static_cast<size_t>(j + 1)];
        double x = golden_section(g, a, b, /*want_max=*/prev_sign > 0);
        if (x > bounds.back() + 1e-12 && x < hi - 1e-12) bounds.push_back(x);
      }
      prev_sign = s;
      prev_idx = j;
    }
    bounds.push_back(hi);

    for (size_t j = 0; j + 1 < bounds.size(); ++j) {
      double a = bounds[j], b = bounds[j + 1];
      double va = g(a), vb = g(b);
      Monotonicity dir = vb > va   ? Monotonicity::increasing
                         : vb < va ? Monotonicity::decreasing
                                   : Monotonicity::constant;
      out.monotone.push_back({a, b, dir, va, vb, static_cast<int>(pi_idx)});
    }
  }

  // Endpoint estimates from the monotone pieces, each of which attains its
  // extremes at its ends. |f| on a monotone piece hits zero iff the value
  // range straddles zero; continuity within a declared piece makes that exact.
  double inf_f = std::numeric_limits<double>::infinity();
  double sup_f = -std::numeric_limits<double>::infinity();
  double inf_abs = std::numeric_limits<double>::infinity();
  double sup_abs = 0.0;
  for (const MonotonePiece& mp : out.monotone) {
    inf_f = std::min(inf_f, mp.vmin());
    sup_f = std::max(sup_f, mp.vmax());
    double piece_abs_min = (mp.vmin() <= 0.0 && mp.vmax() >= 0.0)
                               ? 0.0
                               : std::min(std::abs(mp.v_lo), std::abs(mp.v_hi));
    inf_abs = std::min(inf_abs, piece_abs_min);
    sup_abs = std::max(sup_abs, std::max(std::abs(mp.v_lo), std::abs(mp.v_hi)));
  }

  // The [0,pi] analysis already covers [-pi,pi] for even symbols; with
  // extension = none, scan the negative half by sampling.
  if (spec.extension() == Extension::none && spec.domain_lo() < 0.0) {
    const int ns = 4096;
    int prev_piece = spec.piece_index(spec.domain_lo());
    double prev = spec.eval_real(spec.domain_lo());
    for (int j = 0; j <= ns; ++j) {
      double x = spec.domain_lo() * (1.0 - static_cast<double>(j) / ns);
      double v = spec.eval_real(x);
      int piece = spec.piece_index(x);
      inf_f = std::min(inf_f, v);
      sup_f = std::max(sup_f, v);
      sup_abs = std::max(sup_abs, std::abs(v));
      inf_abs = std::min(inf_abs, std::abs(v));
      if (piece == prev_piece && ((prev < 0.0 && v > 0.0) || (prev > 0.0 && v < 0.0)))
        inf_abs = 0.0;  // continuous sign change within one declared piece
      prev = v;
      prev_piece = piece;
    }
  }
  out.inf_f = inf_f;
  out.sup_f = sup_f;
  out.inf_absf = inf_abs;
  out.sup_absf = sup_abs;
  return out;
}

RealEvenFlags check_real_even(const FourierCoeffs& coeffs, const SymbolSpec* spec) {
  RealEvenFlags f;
  for (int k = coeffs.k_min; k <= coeffs.k_max; ++k) {
    f.max_imag = std::max(f.max_imag, std::abs(coeffs.at(k).imag()));
    if (coeffs.covers(-k))
      f.max_asym = std::max(f.max_asym, std::abs(coeffs.at(k) - coeffs.at(-k)));
  }
  f.real_flag = f.max_imag <= coeffs.tol_coeff;
  f.even_flag = f.max_asym <= coeffs.tol_coeff;

  if (f.real_flag && spec != nullptr) {
    double scale = 1.0;
    double dev = 0.0;
    for (int j = 0; j < 64; ++j) {
      double x = -kPi + (2.0 * kPi) * (j + 0.5) / 64.0;
      std::complex<double> a = spec->eval(-x);
      std::complex<double> b = std::conj(spec->eval(x));
      dev = std::max(dev, std::abs(a - b));
      scale = std::max(scale, std::abs(a));
    }
    f.max_conj_dev = dev;
    f.conj_sym_certified = dev <= coeffs.tol_coeff * scale;
  }
  return f;
}

}  // namespace fliptoep
