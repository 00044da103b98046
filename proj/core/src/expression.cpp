#include "weylps/expression.hpp"

#include <cctype>
#include <sstream>

namespace weylps {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

bool Expr::needs_localization() const {
  if (kind == Kind::Y || kind == Kind::X) return true;
  for (const auto& c : children) {
    if (c->needs_localization()) return true;
  }
  return false;
}

namespace {

struct Token {
  enum class Type { Number, Ident, Symbol, End } type;
  std::string text;
  std::size_t line, column;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (s[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l0 = line, c0 = column;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      // A rational literal p/q is one token.
      if (j + 1 < s.size() && s[j] == '/' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      out.push_back({Token::Type::Number, std::string(s.substr(i, j - i)), l0, c0});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Type::Ident, std::string(s.substr(i, j - i)), l0, c0});
      advance(j - i);
      continue;
    }
    if (std::string_view("()+-*^,").find(c) != std::string_view::npos) {
      out.push_back({Token::Type::Symbol, std::string(1, c), l0, c0});
      advance(1);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", l0, c0);
  }
  out.push_back({Token::Type::End, "", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr parse() {
    auto e = sum();
    if (peek().type != Token::Type::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& message) const {
    const auto& t = peek();
    throw ParseError(message, t.line, t.column);
  }
  bool accept(const char* symbol) {
    if (peek().type == Token::Type::Symbol && peek().text == symbol) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(const char* symbol) {
    if (!accept(symbol)) {
      fail(std::string("expected '") + symbol + "'" + (peek().type == Token::Type::End ? " before end of input" : ""));
    }
  }

  static ExprPtr node(Expr::Kind kind, const Token& at, std::vector<ExprPtr> children = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->line = at.line;
    e->column = at.column;
    e->children = std::move(children);
    return e;
  }

  ExprPtr sum() {
    auto left = product();
    while (true) {
      const Token& t = peek();
      if (accept("+")) {
        left = node(Expr::Kind::Add, t, {left, product()});
      } else if (accept("-")) {
        left = node(Expr::Kind::Sub, t, {left, product()});
      } else {
        return left;
      }
    }
  }

  ExprPtr product() {
    auto left = unary();
    while (true) {
      const Token& t = peek();
      if (!accept("*")) break;
      left = node(Expr::Kind::Mul, t, {left, unary()});
    }
    if (peek().type == Token::Type::Number || peek().type == Token::Type::Ident ||
        (peek().type == Token::Type::Symbol && peek().text == "(")) {
      fail("missing '*' between factors");
    }
    return left;
  }

  ExprPtr unary() {
    const Token& t = peek();
    if (accept("-")) return node(Expr::Kind::Neg, t, {unary()});
    return power();
  }

  ExprPtr power() {
    auto base = atom();
    const Token& t = peek();
    if (accept("^")) {
      if (peek().type != Token::Type::Number || peek().text.find('/') != std::string::npos) {
        fail("exponent must be a non-negative integer");
      }
      auto e = std::make_shared<Expr>(*node(Expr::Kind::Pow, t, {base}));
      e->exponent = static_cast<unsigned>(std::stoul(next().text));
      if (peek().type == Token::Type::Symbol && peek().text == "^") fail("chained exponents need parentheses");
      return e;
    }
    return base;
  }

  int signed_integer() {
    bool negative = accept("-");
    if (peek().type != Token::Type::Number || peek().text.find('/') != std::string::npos) fail("expected an integer index");
    long v = std::stol(next().text);
    return static_cast<int>(negative ? -v : v);
  }

  std::vector<int> index_args(std::size_t count) {
    expect("(");
    std::vector<int> out;
    for (std::size_t j = 0; j < count; ++j) {
      if (j > 0) expect(",");
      out.push_back(signed_integer());
    }
    expect(")");
    return out;
  }

  ExprPtr atom() {
    const Token t = peek();
    if (t.type == Token::Type::Number) {
      next();
      auto e = std::make_shared<Expr>(*node(Expr::Kind::Rational, t));
      try {
        e->value = parse_rational(t.text);
      } catch (const std::invalid_argument& err) {
        throw ParseError(err.what(), t.line, t.column);
      }
      return e;
    }
    if (accept("(")) {
      auto e = sum();
      expect(")");
      return e;
    }
    if (t.type != Token::Type::Ident) fail(t.type == Token::Type::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
    next();
    auto with_args = [&](Expr::Kind kind, std::size_t count) {
      auto e = std::make_shared<Expr>(*node(kind, t));
      e->args = index_args(count);
      return e;
    };
    if (t.text == "i") return node(Expr::Kind::I, t);
    if (t.text == "sqrt2") return node(Expr::Kind::Sqrt2, t);
    if (t.text == "a") return with_args(Expr::Kind::A, 1);
    if (t.text == "ad") return with_args(Expr::Kind::Ad, 1);
    if (t.text == "p") return with_args(Expr::Kind::P, 1);
    if (t.text == "q") return with_args(Expr::Kind::Q, 1);
    if (t.text == "y") return with_args(Expr::Kind::Y, 1);
    if (t.text == "x") return with_args(Expr::Kind::X, 2);
    if (t.text == "N") {
      auto e = std::make_shared<Expr>(*node(Expr::Kind::N, t));
      if (peek().type == Token::Type::Symbol && peek().text == "(") e->args = index_args(1);
      return e;
    }
    if (t.text == "adj") {
      expect("(");
      auto inner = sum();
      expect(")");
      return node(Expr::Kind::Adj, t, {inner});
    }
    throw ParseError("unknown identifier '" + t.text + "'", t.line, t.column);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void require_range(const Expr& e, int v, int lo, int hi, const std::string& what) {
  if (v < lo || v > hi) {
    throw std::invalid_argument("line " + std::to_string(e.line) + ", column " + std::to_string(e.column) + ": " +
                                what + " index " + std::to_string(v) + " out of range " + std::to_string(lo) + ".." +
                                std::to_string(hi));
  }
}

// Evaluation shared by both algebras; Ops supplies the element constructors.
template <typename Ops>
typename Ops::Element eval_with(const Expr& e, const Ops& ops) {
  const int d = static_cast<int>(ops.dim);
  switch (e.kind) {
    case Expr::Kind::Rational: return ops.constant(Scalar(e.value));
    case Expr::Kind::I: return ops.constant(Scalar::i());
    case Expr::Kind::Sqrt2: return ops.constant(Scalar::sqrt2());
    case Expr::Kind::A:
      require_range(e, e.args[0], 1, d, "generator");
      return ops.generator(e.args[0]);
    case Expr::Kind::Ad:
      require_range(e, e.args[0], 1, d, "generator");
      return ops.generator(-e.args[0]);
    case Expr::Kind::P:
      require_range(e, e.args[0], 1, d, "generator");
      return ops.lift(momentum(ops.dim, e.args[0]));
    case Expr::Kind::Q:
      require_range(e, e.args[0], 1, d, "generator");
      return ops.lift(position(ops.dim, e.args[0]));
    case Expr::Kind::N:
      if (!e.args.empty()) require_range(e, e.args[0], 1, d, "mode");
      return ops.lift(number_operator(ops.dim, e.args.empty() ? 0 : e.args[0]));
    case Expr::Kind::Y: return ops.y(e.args[0]);
    case Expr::Kind::X:
      require_range(e, e.args[0], -d, d, "x");
      require_range(e, e.args[1], -d, d, "x");
      return ops.x(e.args[0], e.args[1]);
    case Expr::Kind::Adj: return ops.adjoint(eval_with(*e.children[0], ops));
    case Expr::Kind::Neg: return Scalar(-1) * eval_with(*e.children[0], ops);
    case Expr::Kind::Add: return eval_with(*e.children[0], ops) + eval_with(*e.children[1], ops);
    case Expr::Kind::Sub: return eval_with(*e.children[0], ops) - eval_with(*e.children[1], ops);
    case Expr::Kind::Mul: return ops.mul(eval_with(*e.children[0], ops), eval_with(*e.children[1], ops));
    case Expr::Kind::Pow: {
      auto base = eval_with(*e.children[0], ops);
      auto out = ops.constant(Scalar(1));
      for (unsigned j = 0; j < e.exponent; ++j) out = ops.mul(out, base);
      return out;
    }
  }
  throw std::logic_error("unhandled expression kind");
}

struct WeylOps {
  using Element = WeylElement;
  std::size_t dim;
  Element constant(const Scalar& s) const { return WeylElement::constant(dim, s); }
  Element generator(int k) const { return WeylElement::generator(dim, k); }
  Element lift(const WeylElement& c) const { return c; }
  Element y(int) const { throw std::invalid_argument("y(n) requires --alpha"); }
  Element x(int, int) const { throw std::invalid_argument("x(k,l) requires --alpha"); }
  Element adjoint(const Element& v) const { return weylps::adjoint(v); }
  Element mul(const Element& a, const Element& b) const { return weylps::mul(a, b); }
};

struct LocalizedOps {
  using Element = LocalizedElement;
  std::size_t dim;
  Rational alpha;
  Element constant(const Scalar& s) const { return LocalizedElement::constant(dim, alpha, s); }
  Element generator(int k) const { return make_generator(dim, alpha, k); }
  Element lift(const WeylElement& c) const { return embed(c, alpha); }
  Element y(int n) const { return make_y(dim, alpha, n); }
  Element x(int k, int l) const { return make_x(dim, alpha, k, l); }
  Element adjoint(const Element& v) const { return l_adjoint(v); }
  Element mul(const Element& a, const Element& b) const { return l_mul(a, b); }
};

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(lex(text)).parse(); }

WeylElement evaluate_weyl(const Expr& e, std::size_t dim) { return eval_with(e, WeylOps{dim}); }

LocalizedElement evaluate_localized(const Expr& e, std::size_t dim, const Rational& alpha) {
  validate_alpha(alpha);
  return eval_with(e, LocalizedOps{dim, alpha});
}

AlgebraValue evaluate(const Expr& e, std::size_t dim, const std::optional<Rational>& alpha) {
  if (dim == 0) throw std::invalid_argument("dimension must be at least 1");
  if (e.needs_localization()) {
    if (!alpha) throw std::invalid_argument("y(n) and x(k,l) require alpha");
    return evaluate_localized(e, dim, *alpha);
  }
  return evaluate_weyl(e, dim);
}

std::string to_string(const WeylElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : x.terms()) {
    std::string mono;
    auto append = [&](const char* name, std::size_t mode, unsigned power) {
      if (power == 0) return;
      if (!mono.empty()) mono += "*";
      mono += std::string(name) + "(" + std::to_string(mode + 1) + ")";
      if (power > 1) mono += "^" + std::to_string(power);
    };
    for (std::size_t j = 0; j < x.dim(); ++j) append("a", j, e.k[j]);
    for (std::size_t j = 0; j < x.dim(); ++j) append("ad", j, e.l[j]);
    std::string coeff = to_string(c, true);
    const bool negative = coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (mono.empty()) {
      out << coeff;
    } else if (coeff == "1") {
      out << mono;
    } else {
      out << coeff << "*" << mono;
    }
  }
  return out.str();
}

std::string to_string(const AlgebraValue& v) {
  return std::visit([](const auto& x) { return to_string(x); }, v);
}

}  // namespace weylps
