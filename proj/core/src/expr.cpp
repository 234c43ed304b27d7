#include "fliptoep/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstring>
#include <numbers>

#include "fliptoep/errors.hpp"

namespace fliptoep {

namespace {

bool contains_exp(const std::vector<ExprNode>& nodes, int idx) {
  if (idx < 0) return false;
  const ExprNode& n = nodes[idx];
  if (n.op == ExprOp::exp_ikt) return true;
  return contains_exp(nodes, n.lhs) || contains_exp(nodes, n.rhs);
}

std::complex<double> eval_node(const std::vector<ExprNode>& nodes, int idx, double t) {
  const ExprNode& n = nodes[idx];
  switch (n.op) {
    case ExprOp::constant: return n.a;
    case ExprOp::var_t: return t;
    case ExprOp::cos_kt: return std::cos(n.a * t);
    case ExprOp::sin_kt: return std::sin(n.a * t);
    case ExprOp::exp_ikt: return std::complex<double>(std::cos(n.a * t), std::sin(n.a * t));
    case ExprOp::add: return eval_node(nodes, n.lhs, t) + eval_node(nodes, n.rhs, t);
    case ExprOp::sub: return eval_node(nodes, n.lhs, t) - eval_node(nodes, n.rhs, t);
    case ExprOp::mul: return eval_node(nodes, n.lhs, t) * eval_node(nodes, n.rhs, t);
    case ExprOp::neg: return -eval_node(nodes, n.lhs, t);
    case ExprOp::scale: return n.a * eval_node(nodes, n.lhs, t);
    case ExprOp::shift: return eval_node(nodes, n.lhs, t - n.a);
  }
  return 0.0;
}

double eval_node_real(const std::vector<ExprNode>& nodes, int idx, double t) {
  const ExprNode& n = nodes[idx];
  switch (n.op) {
    case ExprOp::constant: return n.a;
    case ExprOp::var_t: return t;
    case ExprOp::cos_kt: return std::cos(n.a * t);
    case ExprOp::sin_kt: return std::sin(n.a * t);
    case ExprOp::add: return eval_node_real(nodes, n.lhs, t) + eval_node_real(nodes, n.rhs, t);
    case ExprOp::sub: return eval_node_real(nodes, n.lhs, t) - eval_node_real(nodes, n.rhs, t);
    case ExprOp::mul: return eval_node_real(nodes, n.lhs, t) * eval_node_real(nodes, n.rhs, t);
    case ExprOp::neg: return -eval_node_real(nodes, n.lhs, t);
    case ExprOp::scale: return n.a * eval_node_real(nodes, n.lhs, t);
    case ExprOp::shift: return eval_node_real(nodes, n.lhs, t - n.a);
    case ExprOp::exp_ikt: break;
  }
  return 0.0;
}

using CoeffMap = std::map<int, std::complex<double>>;

std::optional<int> as_int(double x) {
  double r = std::round(x);
  if (std::abs(x - r) > 1e-12) return std::nullopt;
  return static_cast<int>(r);
}

std::optional<CoeffMap> coeffs_node(const std::vector<ExprNode>& nodes, int idx) {
  const ExprNode& n = nodes[idx];
  using namespace std::complex_literals;
  switch (n.op) {
    case ExprOp::constant:
      return CoeffMap{{0, n.a}};
    case ExprOp::var_t:
    case ExprOp::shift:
      return std::nullopt;
    case ExprOp::cos_kt: {
      auto k = as_int(n.a);
      if (!k) return std::nullopt;
      CoeffMap m;
      m[*k] += 0.5;
      m[-*k] += 0.5;
      return m;
    }
    case ExprOp::sin_kt: {
      auto k = as_int(n.a);
      if (!k) return std::nullopt;
      CoeffMap m;
      m[*k] += -0.5i;
      m[-*k] += 0.5i;
      return m;
    }
    case ExprOp::exp_ikt: {
      auto k = as_int(n.a);
      if (!k) return std::nullopt;
      return CoeffMap{{*k, 1.0}};
    }
    case ExprOp::add:
    case ExprOp::sub: {
      auto l = coeffs_node(nodes, n.lhs);
      auto r = coeffs_node(nodes, n.rhs);
      if (!l || !r) return std::nullopt;
      for (const auto& [k, c] : *r) (*l)[k] += (n.op == ExprOp::add ? c : -c);
      return l;
    }
    case ExprOp::mul: {
      auto l = coeffs_node(nodes, n.lhs);
      auto r = coeffs_node(nodes, n.rhs);
      if (!l || !r) return std::nullopt;
      CoeffMap m;
      for (const auto& [k1, c1] : *l)
        for (const auto& [k2, c2] : *r) m[k1 + k2] += c1 * c2;
      return m;
    }
    case ExprOp::neg: {
      auto l = coeffs_node(nodes, n.lhs);
      if (!l) return std::nullopt;
      for (auto& [k, c] : *l) c = -c;
      return l;
    }
    case ExprOp::scale: {
      auto l = coeffs_node(nodes, n.lhs);
      if (!l) return std::nullopt;
      for (auto& [k, c] : *l) c *= n.a;
      return l;
    }
  }
  return std::nullopt;
}

}  // namespace

Expr::Expr(std::vector<ExprNode> nodes, int root) : nodes_(std::move(nodes)), root_(root) {
  real_ = !contains_exp(nodes_, root_);
}

std::complex<double> Expr::eval(double t) const { return eval_node(nodes_, root_, t); }

double Expr::eval_real(double t) const { return eval_node_real(nodes_, root_, t); }

std::optional<std::map<int, std::complex<double>>> Expr::trig_coeffs() const {
  auto m = coeffs_node(nodes_, root_);
  if (!m) return std::nullopt;
  for (auto it = m->begin(); it != m->end();) {
    if (it->second == std::complex<double>(0.0, 0.0))
      it = m->erase(it);
    else
      ++it;
  }
  return m;
}

Expr Expr::negated_shift(double delta) const {
  std::vector<ExprNode> nodes = nodes_;
  int sh = static_cast<int>(nodes.size());
  nodes.push_back({ExprOp::shift, delta, root_, -1});
  int ng = static_cast<int>(nodes.size());
  nodes.push_back({ExprOp::neg, 0.0, sh, -1});
  return Expr(std::move(nodes), ng);
}

// ---------------------------------------------------------------------------
// Recursive-descent parser for the symbol DSL:
//   symbol  := piece (';' piece)*
//   piece   := expr ('on' interval)?
//   interval:= '[' num ',' num (')' | ']')
//   expr    := term (('+'|'-') term)*
//   term    := factor ('*' factor | '/' rational)*
//   factor  := rational | 't' | 'pi' | 'cos' '(' linarg ')' | 'sin' '(' linarg ')'
//            | 'exp' '(' 'i' '*' linarg ')' | '(' expr ')' | '-' factor
//   linarg  := (rational '*')? 't'

namespace {

class Parser {
public:
  explicit Parser(const std::string& text) : s_(text) {}

  std::vector<ParsedPiece> parse_symbol() {
    std::vector<ParsedPiece> out;
    out.push_back(parse_piece());
    skip_ws();
    while (!eof() && peek() == ';') {
      ++pos_;
      out.push_back(parse_piece());
      skip_ws();
    }
    skip_ws();
    if (!eof()) fail("unexpected trailing input");
    return out;
  }

private:
  ParsedPiece parse_piece() {
    skip_ws();
    size_t start = pos_;
    nodes_.clear();
    int root = parse_expr();
    ParsedPiece p;
    p.expr = Expr(nodes_, root);
    skip_ws();
    if (match_word("on")) {
      p.has_interval = true;
      skip_ws();
      expect('[');
      p.lo = parse_num();
      skip_ws();
      expect(',');
      p.hi = parse_num();
      skip_ws();
      if (eof()) fail("expected ')' or ']' to close interval");
      char c = peek();
      if (c == ')')
        p.closed_hi = false;
      else if (c == ']')
        p.closed_hi = true;
      else
        fail("expected ')' or ']' to close interval");
      ++pos_;
      if (p.hi <= p.lo) fail("empty piece interval");
    }
    skip_ws();
    p.text = s_.substr(start, pos_ - start);
    return p;
  }

  int parse_expr() {
    int lhs = parse_term();
    for (;;) {
      skip_ws();
      if (!eof() && (peek() == '+' || peek() == '-')) {
        char op = peek();
        ++pos_;
        int rhs = parse_term();
        lhs = add_node({op == '+' ? ExprOp::add : ExprOp::sub, 0.0, lhs, rhs});
      } else {
        return lhs;
      }
    }
  }

  int parse_term() {
    int lhs = parse_factor();
    for (;;) {
      skip_ws();
      if (!eof() && peek() == '*') {
        ++pos_;
        int rhs = parse_factor();
        lhs = add_node({ExprOp::mul, 0.0, lhs, rhs});
      } else if (!eof() && peek() == '/') {
        ++pos_;
        skip_ws();
        double r = parse_rational();
        if (r == 0.0) fail("division by zero");
        lhs = add_node({ExprOp::scale, 1.0 / r, lhs, -1});
      } else {
        return lhs;
      }
    }
  }

  int parse_factor() {
    skip_ws();
    if (eof()) fail("expected factor");
    char c = peek();
    if (c == '-') {
      ++pos_;
      int e = parse_factor();
      return add_node({ExprOp::neg, 0.0, e, -1});
    }
    if (c == '(') {
      ++pos_;
      int e = parse_expr();
      skip_ws();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double r = parse_rational();
      return add_node({ExprOp::constant, r, -1, -1});
    }
    if (match_word("pi")) return add_node({ExprOp::constant, std::numbers::pi, -1, -1});
    if (match_word("cos")) return parse_trig(ExprOp::cos_kt);
    if (match_word("sin")) return parse_trig(ExprOp::sin_kt);
    if (match_word("exp")) {
      skip_ws();
      expect('(');
      skip_ws();
      if (!match_word("i")) fail("expected 'i' in exp(i*...)");
      skip_ws();
      expect('*');
      double k = parse_linarg();
      skip_ws();
      expect(')');
      return add_node({ExprOp::exp_ikt, k, -1, -1});
    }
    if (match_word("t")) return add_node({ExprOp::var_t, 0.0, -1, -1});
    fail("expected factor");
    return -1;
  }

  int parse_trig(ExprOp op) {
    skip_ws();
    expect('(');
    double k = parse_linarg();
    skip_ws();
    expect(')');
    return add_node({op, k, -1, -1});
  }

  // (rational '*')? 't'
  double parse_linarg() {
    skip_ws();
    double k = 1.0;
    if (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
      k = parse_rational();
      skip_ws();
      expect('*');
      skip_ws();
    }
    if (!match_word("t")) fail("expected 't' in trig argument");
    return k;
  }

  // num := ('-')? (rational ('*'? 'pi')? | 'pi') ('/' rational)?
  double parse_num() {
    skip_ws();
    double sign = 1.0;
    if (!eof() && peek() == '-') {
      sign = -1.0;
      ++pos_;
      skip_ws();
    }
    double v;
    if (match_word("pi")) {
      v = std::numbers::pi;
    } else {
      v = parse_rational();
      skip_ws();
      size_t save = pos_;
      bool star = !eof() && peek() == '*';
      if (star) {
        ++pos_;
        skip_ws();
      }
      if (match_word("pi"))
        v *= std::numbers::pi;
      else
        pos_ = save;
    }
    skip_ws();
    if (!eof() && peek() == '/') {
      ++pos_;
      skip_ws();
      double d = parse_rational();
      if (d == 0.0) fail("division by zero in interval bound");
      v /= d;
    }
    return sign * v;
  }

  double parse_rational() {
    skip_ws();
    size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!eof() && peek() == '.') {
      ++pos_;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (pos_ == start) fail("expected number");
    return std::stod(s_.substr(start, pos_ - start));
  }

  bool match_word(const char* w) {
    skip_ws();
    size_t len = std::strlen(w);
    if (s_.compare(pos_, len, w) != 0) return false;
    size_t end = pos_ + len;
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_'))
      return false;
    pos_ = end;
    return true;
  }

  void expect(char c) {
    skip_ws();
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  int add_node(ExprNode n) {
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
  }

  const std::string& s_;
  size_t pos_ = 0;
  std::vector<ExprNode> nodes_;
};

}  // namespace

std::vector<ParsedPiece> parse_pieces(const std::string& text) {
  Parser p(text);
  return p.parse_symbol();
}

}  // namespace fliptoep
