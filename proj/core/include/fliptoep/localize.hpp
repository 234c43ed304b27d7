#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fliptoep/symbol.hpp"

namespace fliptoep {

enum class Verdict { inside, outlier, violation };

/// Localization data for one symbol: the distance d of zero from the convex
/// hull of the essential range, the endpoints of |f|, the trig-poly outlier
/// budget 2r when available, and per-value verdicts filled by the checks.
struct LocalizationReport {
  double d = 0.0;
  double m_absf = 0.0;
  double M_absf = 0.0;
  std::optional<int> r;
  std::optional<int> outlier_budget;  // 2r
  std::vector<Verdict> verdicts;
  int inside_count = 0;
  int outlier_count = 0;
  int violation_count = 0;
  bool abs_f_constant = false;
  bool strict_ok = true;  // sigma_max < M_|f| when |f| is not a.e. constant
  int n = 0;
};

/// Distance of the origin from the convex hull of the (sampled) essential
/// range: interval arithmetic for real symbols, a planar hull for complex.
double hull_distance(const SymbolSpec& spec);

/// Endpoints of |f| by dense sampling with golden-section refinement; works
/// for complex-valued symbols as well.
std::pair<double, double> abs_range(const SymbolSpec& spec);

/// Skeleton report for a symbol (d, |f| endpoints, budget); no verdicts yet.
LocalizationReport make_localization_report(const SymbolSpec& spec);

/// Verdicts for singular values of T_n(f): all must lie in [d, M_|f|]; for
/// trig polynomials at most 2r may fall below m_|f|; when |f| is not a.e.
/// constant the top one must stay strictly below M_|f|.
LocalizationReport check_singular_localization(const SymbolSpec& spec,
                                               std::span<const double> singular_values);

/// Verdicts for eigenvalues of H_n(f): moduli obey the same bounds, so the
/// spectrum sits in [-M_|f|, -d] u [d, M_|f|] with at most 2r small outliers
/// inside (-m_|f|, m_|f|) for trig polynomials.
LocalizationReport check_flipped_localization(const SymbolSpec& spec,
                                              std::span<const double> flipped_eigenvalues);

}  // namespace fliptoep
