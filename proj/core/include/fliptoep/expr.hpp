#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fliptoep {

// Closed-form expression in the variable t, built by the symbol DSL parser.
// Nodes live in a flat arena and are evaluated by index; trig/exponential
// factors carry their (rational) frequency directly, so `t` only appears as
// a node when used outside a trig argument.
enum class ExprOp : std::uint8_t {
  constant,  // value in a
  var_t,
  cos_kt,  // frequency in a
  sin_kt,
  exp_ikt,
  add,   // lhs + rhs
  sub,   // lhs - rhs
  mul,   // lhs * rhs
  neg,   // -lhs
  scale,  // a * lhs  (division by a rational folds to this)
  shift,  // lhs evaluated at (t - a)
};

struct ExprNode {
  ExprOp op;
  double a = 0.0;
  int lhs = -1;
  int rhs = -1;
};

class Expr {
public:
  Expr() = default;
  Expr(std::vector<ExprNode> nodes, int root);

  bool valid() const { return root_ >= 0; }
  /// True when the expression never produces an imaginary part.
  bool is_real() const { return real_; }

  std::complex<double> eval(double t) const;
  /// Fast path; requires is_real().
  double eval_real(double t) const;

  /// Exact complex-exponential coefficients {k -> c_k} when the expression
  /// is a trigonometric polynomial with integer frequencies; nullopt otherwise.
  std::optional<std::map<int, std::complex<double>>> trig_coeffs() const;

  /// New expression t -> -this(t - delta).
  Expr negated_shift(double delta) const;

  const std::vector<ExprNode>& nodes() const { return nodes_; }
  int root() const { return root_; }

private:
  std::vector<ExprNode> nodes_;
  int root_ = -1;
  bool real_ = true;
};

/// One parsed `expr ('on' interval)?` clause.
struct ParsedPiece {
  Expr expr;
  bool has_interval = false;
  double lo = 0.0;
  double hi = 0.0;
  bool closed_hi = false;
  std::string text;  // source slice, for reports
};

/// Parses the full DSL string `piece (';' piece)*`. Throws ParseError.
std::vector<ParsedPiece> parse_pieces(const std::string& text);

}  // namespace fliptoep
