#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "weylps/localized.hpp"
#include "weylps/weyl_algebra.hpp"

namespace weylps {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Surface syntax tree.
struct Expr {
  enum class Kind {
    Rational,   // value
    I,          // i
    Sqrt2,      // sqrt2
    A,          // a(k)
    Ad,         // ad(k)
    P,          // p(k)
    Q,          // q(k)
    N,          // N or N(k); args empty for total N
    Y,          // y(n)
    X,          // x(k, l)
    Adj,        // adj(e)
    Neg,        // -e
    Add,
    Sub,
    Mul,
    Pow         // e ^ exponent
  };
  Kind kind;
  Rational value;
  std::vector<int> args;
  unsigned exponent = 0;
  std::vector<std::shared_ptr<const Expr>> children;
  std::size_t line = 1, column = 1;

  /// True when y(n) or x(k,l) occurs, so evaluation needs the localized algebra.
  bool needs_localization() const;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Precedence ^ > unary minus > * > binary + and -. Multiplication needs an explicit '*'.
ExprPtr parse_expression(std::string_view text);

using AlgebraValue = std::variant<WeylElement, LocalizedElement>;

/// Evaluates in W(d), or in the localized algebra when y/x occur. Throws
/// std::invalid_argument on out-of-range indices or a missing alpha.
AlgebraValue evaluate(const Expr& e, std::size_t dim, const std::optional<Rational>& alpha);
WeylElement evaluate_weyl(const Expr& e, std::size_t dim);
LocalizedElement evaluate_localized(const Expr& e, std::size_t dim, const Rational& alpha);

/// Canonical printing in the PBW order; the output parses back to the same element.
std::string to_string(const WeylElement& x);
std::string to_string(const AlgebraValue& v);

}  // namespace weylps
