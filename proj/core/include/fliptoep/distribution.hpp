#pragma once

#include <span>
#include <vector>

#include "fliptoep/spectra.hpp"
#include "fliptoep/symbol.hpp"

namespace fliptoep {

enum class DistClass { all_T, all_H, plus, minus };

/// Moment comparison between an eigenvalue multiset and the symbol: for each
/// p, lhs = (1/n) sum lambda_i^p and rhs = the domain average of f^p.
struct DistReport {
  int n = 0;
  DistClass cls = DistClass::all_T;
  std::vector<double> lhs;   // index p-1
  std::vector<double> rhs;
  std::vector<double> gaps;  // |lhs - rhs|
};

/// Moment gaps of a real eigenvalue multiset against a real bounded symbol,
/// p = 1..p_max. Even symbols average over [0,pi].
DistReport moment_gap(std::span<const double> eigs, const SymbolSpec& spec, int p_max);

/// Per-class moment gaps: the symmetric class against f and the skew class
/// against -f.
std::pair<DistReport, DistReport> class_moment_gap(const SpectralPairing& pairing,
                                                   const SymbolSpec& spec, int p_max);

/// The rearranged symbol psi on [0,2pi]: g on [0,pi], -g(x-pi) on (pi,2pi].
/// Spectral symbol of the flipped sequence for real even coefficients.
SymbolSpec psi_concat(const SymbolSpec& spec);

}  // namespace fliptoep
