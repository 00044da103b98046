#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "weylps/scalar.hpp"

namespace weylps {

/// Exponents of the PBW monomial a_1^{k_1}...a_d^{k_d} a_{-1}^{l_1}...a_{-d}^{l_d}.
struct MultiIndexPair {
  std::vector<unsigned> k;  // annihilators a_1..a_d
  std::vector<unsigned> l;  // creators a_{-1}..a_{-d}

  std::size_t dim() const { return k.size(); }
  unsigned degree() const;

  friend bool operator==(const MultiIndexPair&, const MultiIndexPair&) = default;
};

/// Term order: higher filtration degree first, then larger k, then larger l
/// (lexicographic). Printing follows this order.
struct PbwOrder {
  bool operator()(const MultiIndexPair& x, const MultiIndexPair& y) const;
};

/// Filtration degree; std::nullopt is the bottom marker of the zero element.
using Degree = std::optional<unsigned>;

/// Element of W(d) in normal (PBW) form: annihilators left of creators.
class WeylElement {
 public:
  using Terms = std::map<MultiIndexPair, Scalar, PbwOrder>;

  explicit WeylElement(std::size_t dim);

  static WeylElement zero(std::size_t dim) { return WeylElement(dim); }
  static WeylElement constant(std::size_t dim, const Scalar& value);
  static WeylElement one(std::size_t dim) { return constant(dim, Scalar(1)); }
  /// a_k for k in 1..d, a_{-k} for k in -d..-1, and 1 for k == 0.
  static WeylElement generator(std::size_t dim, int index);
  static WeylElement monomial(const MultiIndexPair& exponents, const Scalar& coefficient = Scalar(1));

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of a basis monomial (zero when absent).
  Scalar coefficient(const MultiIndexPair& exponents) const;

  /// Adds coefficient * monomial, dropping the term if it cancels.
  void add_term(const MultiIndexPair& exponents, const Scalar& coefficient);

  WeylElement& operator+=(const WeylElement& y);
  WeylElement& operator-=(const WeylElement& y);
  WeylElement& operator*=(const Scalar& s);

  friend WeylElement operator+(WeylElement x, const WeylElement& y) { return x += y; }
  friend WeylElement operator-(WeylElement x, const WeylElement& y) { return x -= y; }
  friend WeylElement operator-(WeylElement x) { return x *= Scalar(-1); }
  friend WeylElement operator*(const Scalar& s, WeylElement x) { return x *= s; }
  friend WeylElement operator*(const WeylElement& x, const WeylElement& y);
  friend bool operator==(const WeylElement& x, const WeylElement& y) {
    return x.dim_ == y.dim_ && x.terms_ == y.terms_;
  }

 private:
  std::size_t dim_;
  Terms terms_;
};

/// Normal-ordered product. Throws std::invalid_argument on dimension mismatch.
WeylElement mul(const WeylElement& x, const WeylElement& y);

/// Involution: antilinear anti-homomorphism with a_k^* = a_{-k}.
WeylElement adjoint(const WeylElement& x);

bool is_hermitean(const WeylElement& x);

Degree degree(const WeylElement& x);

/// N_mode = a_{-mode} a_mode for mode in 1..d; mode 0 gives N = N_1 + ... + N_d.
WeylElement number_operator(std::size_t dim, int mode);

/// p(N) for p given by coefficients low-to-high.
WeylElement from_n_polynomial(std::size_t dim, const std::vector<Scalar>& coefficients);

/// sum_j a_j c a_{-j}.
WeylElement build_ctilde(const WeylElement& c);

/// Hermitean generators q_k = (a_k + a_{-k})/sqrt2 and p_k = i(a_{-k} - a_k)/sqrt2.
WeylElement position(std::size_t dim, int mode);
WeylElement momentum(std::size_t dim, int mode);

/// Integer power, x^0 = 1.
WeylElement power(const WeylElement& x, unsigned exponent);

}  // namespace weylps
