#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "fliptoep/expr.hpp"

namespace fliptoep {

enum class Extension { even, none };

/// Exact complex-exponential coefficients of a trigonometric polynomial,
/// c_k for k = -degree..degree.
struct TrigPoly {
  int degree = 0;
  std::vector<std::complex<double>> coeffs;

  std::complex<double> at(int k) const {
    if (k < -degree || k > degree) return {0.0, 0.0};
    return coeffs[static_cast<size_t>(k + degree)];
  }
};

/// A parsed symbol: piecewise closed-form expressions partitioning the base
/// domain, plus an extension mode and analytic metadata.
class SymbolSpec {
public:
  struct Piece {
    Expr expr;
    double lo = 0.0;
    double hi = 0.0;
    bool closed_hi = false;
    std::string text;
  };

  SymbolSpec() = default;
  /// Direct constructor for programmatic symbols (psi_concat and tests).
  /// Pieces must be ordered and partition [domain_lo, domain_hi].
  SymbolSpec(std::vector<Piece> pieces, double domain_lo, double domain_hi, Extension ext,
             std::string text);

  double domain_lo() const { return domain_lo_; }
  double domain_hi() const { return domain_hi_; }
  Extension extension() const { return extension_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::string& text() const { return text_; }
  bool is_real() const { return real_; }
  const std::optional<TrigPoly>& trig_poly() const { return trig_; }

  /// Evaluation on the full working domain; extension = even reflects x < 0.
  std::complex<double> eval(double x) const;
  /// Fast path; requires is_real().
  double eval_real(double x) const;

  /// Index of the piece whose interval contains x (after extension folding).
  int piece_index(double x) const;

private:
  friend SymbolSpec parse_symbol(const std::string&, Extension);

  void detect_trig_poly();
  double fold(double x) const;

  std::vector<Piece> pieces_;
  double domain_lo_ = 0.0;
  double domain_hi_ = 0.0;
  Extension extension_ = Extension::even;
  std::optional<TrigPoly> trig_;
  std::string text_;
  bool real_ = true;
};

/// Parses the DSL text into a SymbolSpec. Throws ParseError on syntax errors
/// and on gapped/overlapping piece intervals.
SymbolSpec parse_symbol(const std::string& text, Extension ext = Extension::even);

struct FourierCoeffs {
  int k_min = 0;
  int k_max = 0;
  std::vector<std::complex<double>> values;  // index k - k_min
  bool real_flag = false;
  bool even_flag = false;
  double tol_coeff = 1e-10;
  std::optional<int> trig_degree;  // set when the exact trig-poly path was used

  std::complex<double> at(int k) const { return values[static_cast<size_t>(k - k_min)]; }
  bool covers(int k) const { return k >= k_min && k <= k_max; }
};

/// Fourier coefficients f_k, k = -K..K. Exact for trig polynomials; adaptive
/// Simpson per piece otherwise (even extension uses the cosine form on [0,pi]).
/// Throws QuadratureError if the tolerance is not met at max refinement depth.
FourierCoeffs fourier_coeffs(const SymbolSpec& spec, int K, double tol = 1e-12);

enum class Monotonicity { increasing, decreasing, constant };

struct MonotonePiece {
  double lo = 0.0;
  double hi = 0.0;
  Monotonicity dir = Monotonicity::constant;
  double v_lo = 0.0;  // one-sided values from the owning declared piece
  double v_hi = 0.0;
  int declared_piece = 0;

  double vmin() const { return v_lo < v_hi ? v_lo : v_hi; }
  double vmax() const { return v_lo > v_hi ? v_lo : v_hi; }
};

struct RangeInfo {
  double inf_f = 0.0;
  double sup_f = 0.0;
  double inf_absf = 0.0;
  double sup_absf = 0.0;
  std::vector<MonotonePiece> monotone;  // covers [0,pi]
  int sample_density = 0;               // samples per unit length
};

/// Endpoint estimates and the monotone decomposition on [0,pi] for a
/// real-valued symbol. Throws std::invalid_argument for non-real symbols.
RangeInfo range_info(const SymbolSpec& spec);

struct RealEvenFlags {
  bool real_flag = false;
  bool even_flag = false;
  double max_imag = 0.0;
  double max_asym = 0.0;
  bool conj_sym_certified = false;
  double max_conj_dev = 0.0;
};

/// Classifies coefficients as real/even within tol_coeff. When real and a
/// spec is supplied, also certifies f(-x) = conj(f(x)) on sampled points.
RealEvenFlags check_real_even(const FourierCoeffs& coeffs, const SymbolSpec* spec = nullptr);

}  // namespace fliptoep
