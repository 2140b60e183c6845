#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mixcurve/errors.hpp"
#include "mixcurve/jet.hpp"

namespace mixcurve {

enum class TokenKind { Number, Identifier, Operator, Paren, Separator };

struct Token {
  TokenKind kind;
  std::string lexeme;
  SourceSpan span;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Longest-match lexer. Whitespace separates tokens and is otherwise dropped.
std::vector<Token> tokenize(std::string_view src);

enum class Op { Constant, Variable, Pi, Neg, Add, Sub, Mul, Div, Pow, Sin, Cos, Sqrt, Exp, Ln };

/// Number of children a node of this kind carries.
int arity(Op op);

/// Immutable expression tree in the variable t. Copies share structure.
class Expr {
 public:
  static Expr constant(double v);
  static Expr variable();
  static Expr pi();
  static Expr unary(Op op, Expr arg);
  static Expr binary(Op op, Expr lhs, Expr rhs);

  Op op() const { return node_->op; }
  double value() const { return node_->value; }
  const Expr& arg(int i) const { return node_->args[static_cast<std::size_t>(i)]; }
  int size() const { return static_cast<int>(node_->args.size()); }

  /// Exponent is a literal integer (possibly negated); such powers are
  /// evaluated by repeated multiplication.
  bool is_integer_power() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node {
    Op op;
    double value = 0.0;
    std::vector<Expr> args;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Precedence, loosest first: + -, then * /, then unary minus, then ^ (right-assoc).
/// Function application requires parentheses: sin(t), not sin t.
Expr parse(const std::vector<Token>& tokens);
Expr parse(std::string_view src);

/// Canonical fully parenthesized text; parse(to_string(e)) == e.
std::string to_string(const Expr& e);

/// Order-N Taylor data of e at t0. Instantiated for N = 0..6.
template <int N>
Jet<N> eval(const Expr& e, double t0);

inline Jet3 eval_jet(const Expr& e, double t0) { return eval<3>(e, t0); }

}  // namespace mixcurve
