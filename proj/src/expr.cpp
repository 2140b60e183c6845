#include "mixcurve/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

namespace mixcurve {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Length of the longest decimal literal starting at i, or 0.
std::size_t scan_number(std::string_view s, std::size_t i) {
  std::size_t j = i;
  const std::size_t n = s.size();
  bool digits = false;
  while (j < n && is_digit(s[j])) {
    ++j;
    digits = true;
  }
  if (j < n && s[j] == '.') {
    std::size_t k = j + 1;
    bool frac = false;
    while (k < n && is_digit(s[k])) {
      ++k;
      frac = true;
    }
    if (digits || frac) {
      j = k;
      digits = true;
    }
  }
  if (!digits) return 0;
  if (j < n && (s[j] == 'e' || s[j] == 'E')) {
    std::size_t k = j + 1;
    if (k < n && (s[k] == '+' || s[k] == '-')) ++k;
    std::size_t e = k;
    while (e < n && is_digit(s[e])) ++e;
    if (e > k) j = e;
  }
  return j - i;
}

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::size_t len = scan_number(src, i); len > 0) {
      out.push_back({TokenKind::Number, std::string(src.substr(i, len)), {i, i + len}});
      i += len;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t j = i + 1;
      while (j < src.size() && is_ident_char(src[j])) ++j;
      out.push_back({TokenKind::Identifier, std::string(src.substr(i, j - i)), {i, j}});
      i = j;
      continue;
    }
    switch (c) {
      case '+':
      case '-':
      case '*':
      case '/':
      case '^':
        out.push_back({TokenKind::Operator, std::string(1, c), {i, i + 1}});
        break;
      case '(':
      case ')':
        out.push_back({TokenKind::Paren, std::string(1, c), {i, i + 1}});
        break;
      case ',':
        out.push_back({TokenKind::Separator, std::string(1, c), {i, i + 1}});
        break;
      default:
        throw LexError(std::string("unrecognized character '") + c + "'", i);
    }
    ++i;
  }
  return out;
}

int arity(Op op) {
  switch (op) {
    case Op::Constant:
    case Op::Variable:
    case Op::Pi:
      return 0;
    case Op::Neg:
    case Op::Sin:
    case Op::Cos:
    case Op::Sqrt:
    case Op::Exp:
    case Op::Ln:
      return 1;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div:
    case Op::Pow:
      return 2;
  }
  return -1;
}

Expr Expr::constant(double v) {
  if (!std::isfinite(v)) throw InputError("non-finite constant in expression");
  return Expr(std::make_shared<const Node>(Node{Op::Constant, v, {}}));
}
Expr Expr::variable() { return Expr(std::make_shared<const Node>(Node{Op::Variable, 0.0, {}})); }
Expr Expr::pi() { return Expr(std::make_shared<const Node>(Node{Op::Pi, 0.0, {}})); }

Expr Expr::unary(Op op, Expr arg) {
  if (arity(op) != 1) throw InputError("operator is not unary");
  return Expr(std::make_shared<const Node>(Node{op, 0.0, {std::move(arg)}}));
}

Expr Expr::binary(Op op, Expr lhs, Expr rhs) {
  if (arity(op) != 2) throw InputError("operator is not binary");
  return Expr(std::make_shared<const Node>(Node{op, 0.0, {std::move(lhs), std::move(rhs)}}));
}

bool Expr::is_integer_power() const {
  if (op() != Op::Pow) return false;
  const Expr* e = &arg(1);
  if (e->op() == Op::Neg) e = &e->arg(0);
  return e->op() == Op::Constant && std::trunc(e->value()) == e->value() &&
         std::abs(e->value()) < 1e9;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op() || a.size() != b.size()) return false;
  if (a.op() == Op::Constant && a.value() != b.value()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (!(a.arg(i) == b.arg(i))) return false;
  return true;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

  Expr run() {
    if (toks_.empty()) throw ParseError("empty expression", {0, 0});
    Expr e = sum();
    if (pos_ < toks_.size()) throw ParseError("unexpected '" + peek().lexeme + "'", peek().span);
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return pos_ >= toks_.size(); }
  bool match(TokenKind k, std::string_view lex) {
    if (!at_end() && peek().kind == k && peek().lexeme == lex) {
      ++pos_;
      return true;
    }
    return false;
  }
  SourceSpan end_span() const {
    const std::size_t e = toks_.empty() ? 0 : toks_.back().span.end;
    return {e, e};
  }

  Expr sum() {
    Expr lhs = product();
    for (;;) {
      if (match(TokenKind::Operator, "+"))
        lhs = Expr::binary(Op::Add, lhs, product());
      else if (match(TokenKind::Operator, "-"))
        lhs = Expr::binary(Op::Sub, lhs, product());
      else
        return lhs;
    }
  }

  Expr product() {
    Expr lhs = signed_factor();
    for (;;) {
      if (match(TokenKind::Operator, "*"))
        lhs = Expr::binary(Op::Mul, lhs, signed_factor());
      else if (match(TokenKind::Operator, "/"))
        lhs = Expr::binary(Op::Div, lhs, signed_factor());
      else
        return lhs;
    }
  }

  Expr signed_factor() {
    if (match(TokenKind::Operator, "-")) return Expr::unary(Op::Neg, signed_factor());
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (match(TokenKind::Operator, "^")) return Expr::binary(Op::Pow, base, signed_factor());
    return base;
  }

  Expr primary() {
    if (at_end()) throw ParseError("expected operand", end_span());
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::Number: {
        ++pos_;
        double v = 0.0;
        auto [p, ec] = std::from_chars(tok.lexeme.data(), tok.lexeme.data() + tok.lexeme.size(), v);
        if (ec != std::errc() || !std::isfinite(v)) throw ParseError("bad number", tok.span);
        return Expr::constant(v);
      }
      case TokenKind::Identifier:
        return identifier();
      case TokenKind::Paren:
        if (tok.lexeme == "(") {
          ++pos_;
          Expr inner = sum();
          if (!match(TokenKind::Paren, ")"))
            throw ParseError("missing ')'", at_end() ? end_span() : peek().span);
          return inner;
        }
        throw ParseError("unbalanced ')'", tok.span);
      case TokenKind::Operator:
        throw ParseError("dangling operator '" + tok.lexeme + "'", tok.span);
      case TokenKind::Separator:
        throw ParseError("unexpected ','", tok.span);
    }
    throw ParseError("unexpected token", tok.span);
  }

  Expr identifier() {
    const Token& tok = peek();
    ++pos_;
    const std::string& name = tok.lexeme;
    if (name == "t") return Expr::variable();
    if (name == "pi") return Expr::pi();
    Op fn;
    if (name == "sin")
      fn = Op::Sin;
    else if (name == "cos")
      fn = Op::Cos;
    else if (name == "sqrt")
      fn = Op::Sqrt;
    else if (name == "exp")
      fn = Op::Exp;
    else if (name == "ln")
      fn = Op::Ln;
    else if (!at_end() && peek().kind == TokenKind::Paren && peek().lexeme == "(")
      throw ParseError("unknown function '" + name + "'", tok.span);
    else
      throw ParseError("unknown identifier '" + name + "'", tok.span);

    if (!match(TokenKind::Paren, "("))
      throw ParseError("function '" + name + "' requires parentheses", tok.span);
    Expr arg = sum();
    if (!match(TokenKind::Paren, ")"))
      throw ParseError("missing ')'", at_end() ? end_span() : peek().span);
    return Expr::unary(fn, arg);
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

std::string number_text(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::string_view function_name(Op op) {
  switch (op) {
    case Op::Sin:
      return "sin";
    case Op::Cos:
      return "cos";
    case Op::Sqrt:
      return "sqrt";
    case Op::Exp:
      return "exp";
    case Op::Ln:
      return "ln";
    default:
      return "";
  }
}

char binary_symbol(Op op) {
  switch (op) {
    case Op::Add:
      return '+';
    case Op::Sub:
      return '-';
    case Op::Mul:
      return '*';
    case Op::Div:
      return '/';
    case Op::Pow:
      return '^';
    default:
      return '?';
  }
}

template <int N>
Jet<N> eval_node(const Expr& e, const Jet<N>& t) {
  switch (e.op()) {
    case Op::Constant:
      return Jet<N>(e.value());
    case Op::Variable:
      return t;
    case Op::Pi:
      return Jet<N>(std::numbers::pi);
    case Op::Neg:
      return -eval_node(e.arg(0), t);
    case Op::Add:
      return eval_node(e.arg(0), t) + eval_node(e.arg(1), t);
    case Op::Sub:
      return eval_node(e.arg(0), t) - eval_node(e.arg(1), t);
    case Op::Mul:
      return eval_node(e.arg(0), t) * eval_node(e.arg(1), t);
    case Op::Div:
      return eval_node(e.arg(0), t) / eval_node(e.arg(1), t);
    case Op::Pow: {
      Jet<N> base = eval_node(e.arg(0), t);
      if (e.is_integer_power()) {
        const Expr& ex = e.arg(1);
        const long n = ex.op() == Op::Neg ? -static_cast<long>(ex.arg(0).value())
                                          : static_cast<long>(ex.value());
        return ipow(base, n);
      }
      return pow(base, eval_node(e.arg(1), t));
    }
    case Op::Sin:
      return sin(eval_node(e.arg(0), t));
    case Op::Cos:
      return cos(eval_node(e.arg(0), t));
    case Op::Sqrt:
      return sqrt(eval_node(e.arg(0), t));
    case Op::Exp:
      return exp(eval_node(e.arg(0), t));
    case Op::Ln:
      return log(eval_node(e.arg(0), t));
  }
  throw InputError("malformed expression node");
}

}  // namespace

Expr parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

Expr parse(std::string_view src) { return parse(tokenize(src)); }

std::string to_string(const Expr& e) {
  switch (e.op()) {
    case Op::Constant:
      return std::signbit(e.value()) ? "(" + number_text(e.value()) + ")" : number_text(e.value());
    case Op::Variable:
      return "t";
    case Op::Pi:
      return "pi";
    case Op::Neg:
      return "(-" + to_string(e.arg(0)) + ")";
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div:
    case Op::Pow:
      return "(" + to_string(e.arg(0)) + binary_symbol(e.op()) + to_string(e.arg(1)) + ")";
    default:
      return std::string(function_name(e.op())) + "(" + to_string(e.arg(0)) + ")";
  }
}

template <int N>
Jet<N> eval(const Expr& e, double t0) {
  if (!std::isfinite(t0)) throw InputError("non-finite parameter");
  return eval_node(e, Jet<N>::variable(t0));
}

template Jet<0> eval<0>(const Expr&, double);
template Jet<1> eval<1>(const Expr&, double);
template Jet<2> eval<2>(const Expr&, double);
template Jet<3> eval<3>(const Expr&, double);
template Jet<4> eval<4>(const Expr&, double);
template Jet<5> eval<5>(const Expr&, double);
template Jet<6> eval<6>(const Expr&, double);

}  // namespace mixcurve
