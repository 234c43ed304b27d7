#include "fliptoep/distribution.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fliptoep/errors.hpp"
#include "fliptoep/quadrature.hpp"

namespace fliptoep {

namespace {

constexpr double kPi = std::numbers::pi;

// Domain average of f^p over the symbol's working domain.
double symbol_moment(const SymbolSpec& spec, int p, double tol = 1e-12) {
  double acc = 0.0;
  bool ok = true;
  double worst = 0.0;
  double len = 0.0;
  for (const auto& piece : spec.pieces()) {
    auto r = adaptive_simpson<double>(
        [&](double x) { return std::pow(piece.expr.eval_real(x), p); }, piece.lo, piece.hi, tol,
        40, 0.0);
    acc += r.value;
    worst = std::max(worst, r.err_estimate);
    ok = ok && r.converged;
    len += piece.hi - piece.lo;
  }
  if (!ok) throw QuadratureError("symbol_moment: quadrature did not converge", worst);
  return acc / len;
}

DistReport moments_of(std::span<const double> values, const SymbolSpec& spec, int p_max,
                      bool negate_symbol, DistClass cls) {
  DistReport rep;
  rep.n = static_cast<int>(values.size());
  rep.cls = cls;
  for (int p = 1; p <= p_max; ++p) {
    double lhs = 0.0;
    for (double v : values) lhs += std::pow(v, p);
    lhs /= values.empty() ? 1.0 : static_cast<double>(values.size());
    double rhs = symbol_moment(spec, p);
    if (negate_symbol && p % 2 == 1) rhs = -rhs;
    rep.lhs.push_back(lhs);
    rep.rhs.push_back(rhs);
    rep.gaps.push_back(std::abs(lhs - rhs));
  }
  return rep;
}

}  // namespace

DistReport moment_gap(std::span<const double> eigs, const SymbolSpec& spec, int p_max) {
  if (!spec.is_real()) throw std::invalid_argument("moment_gap: symbol must be real");
  return moments_of(eigs, spec, p_max, /*negate_symbol=*/false, DistClass::all_T);
}

std::pair<DistReport, DistReport> class_moment_gap(const SpectralPairing& pairing,
                                                   const SymbolSpec& spec, int p_max) {
  if (!spec.is_real()) throw std::invalid_argument("class_moment_gap: symbol must be real");
  const std::vector<double> plus = pairing.lamT_of(SymClass::symmetric);
  std::vector<double> minus = pairing.lamT_of(SymClass::skew);
  for (double& v : minus) v = -v;  // the skew class of H carries -lamT
  DistReport rp = moments_of(plus, spec, p_max, /*negate_symbol=*/false, DistClass::plus);
  DistReport rm = moments_of(minus, spec, p_max, /*negate_symbol=*/true, DistClass::minus);
  rp.n = pairing.n;
  rm.n = pairing.n;
  return {std::move(rp), std::move(rm)};
}

SymbolSpec psi_concat(const SymbolSpec& spec) {
  if (spec.domain_lo() != 0.0 || std::abs(spec.domain_hi() - kPi) > 1e-12)
    throw std::invalid_argument("psi_concat: symbol must live on [0,pi]");
  std::vector<SymbolSpec::Piece> pieces;
  for (const auto& p : spec.pieces()) {
    SymbolSpec::Piece q = p;
    // The g-branch owns the point pi; the shifted branch starts open there.
    if (std::abs(q.hi - kPi) <= 1e-12) q.closed_hi = true;
    pieces.push_back(std::move(q));
  }
  for (const auto& p : spec.pieces()) {
    SymbolSpec::Piece q;
    q.expr = p.expr.negated_shift(kPi);
    q.lo = p.lo + kPi;
    q.hi = p.hi + kPi;
    q.closed_hi = std::abs(q.hi - 2.0 * kPi) <= 1e-12;
    q.text = "-(" + p.text + ") shifted by pi";
    pieces.push_back(std::move(q));
  }
  return SymbolSpec(std::move(pieces), 0.0, 2.0 * kPi, Extension::none,
                    "psi[" + spec.text() + "]");
}

}  // namespace fliptoep
