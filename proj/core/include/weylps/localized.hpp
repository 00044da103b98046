#pragma once

#include <map>
#include <string>
#include <vector>

#include "weylps/shift_rational.hpp"
#include "weylps/weyl_algebra.hpp"

namespace weylps {

/// Throws std::invalid_argument unless alpha > 0 and alpha is not an integer.
void validate_alpha(const Rational& alpha);

/// Element of the localization of W(d) at the resolvents (N + alpha + n), n in Z.
///
/// Terms are E_s * f(nu): s in Z^d selects a_k^{s_k} (s_k > 0) or a_{-k}^{-s_k}
/// (s_k < 0) per mode, nu_k stands for N_k, and the coefficient sits on the right.
class LocalizedElement {
 public:
  using Shift = std::vector<int>;
  using Terms = std::map<Shift, ShiftRational>;

  LocalizedElement(std::size_t dim, Rational alpha);

  static LocalizedElement constant(std::size_t dim, const Rational& alpha, const Scalar& value);
  static LocalizedElement one(std::size_t dim, const Rational& alpha) { return constant(dim, alpha, Scalar(1)); }
  static LocalizedElement term(const Shift& shift, const ShiftRational& coefficient);

  std::size_t dim() const { return dim_; }
  const Rational& alpha() const { return alpha_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ShiftRational coefficient(const Shift& shift) const;

  void add_term(const Shift& shift, const ShiftRational& coefficient);

  /// max over terms of |s|/2 + weight(f); elements of the generated algebra have
  /// weight <= 0, and y_0 times such an element has weight <= -1. Zero gives a very small value.
  Rational boundedness_weight() const;

  LocalizedElement& operator+=(const LocalizedElement& y);
  LocalizedElement& operator-=(const LocalizedElement& y);
  LocalizedElement& operator*=(const Scalar& s);
  friend LocalizedElement operator+(LocalizedElement x, const LocalizedElement& y) { return x += y; }
  friend LocalizedElement operator-(LocalizedElement x, const LocalizedElement& y) { return x -= y; }
  friend LocalizedElement operator-(LocalizedElement x) { return x *= Scalar(-1); }
  friend LocalizedElement operator*(const Scalar& s, LocalizedElement x) { return x *= s; }
  friend LocalizedElement operator*(const LocalizedElement& x, const LocalizedElement& y);
  friend bool operator==(const LocalizedElement& x, const LocalizedElement& y) {
    return x.dim_ == y.dim_ && x.alpha_ == y.alpha_ && x.terms_ == y.terms_;
  }

 private:
  std::size_t dim_;
  Rational alpha_;
  Terms terms_;
};

/// Product via the shift rule f(nu) E_t = E_t f(nu - t). Throws on dimension or alpha mismatch.
LocalizedElement l_mul(const LocalizedElement& x, const LocalizedElement& y);
LocalizedElement l_adjoint(const LocalizedElement& x);
LocalizedElement l_power(const LocalizedElement& x, unsigned exponent);

/// The *-homomorphic image of a Weyl element.
LocalizedElement embed(const WeylElement& c, const Rational& alpha);

/// a_k (k > 0), a_{-k} (k < 0), 1 (k == 0).
LocalizedElement make_generator(std::size_t dim, const Rational& alpha, int index);
/// N_mode, or N for mode == 0.
LocalizedElement make_number(std::size_t dim, const Rational& alpha, int mode);
/// y_n = (N + alpha + n)^{-1}.
LocalizedElement make_y(std::size_t dim, const Rational& alpha, int n);
/// x_{kl} = a_k a_l (N + alpha)^{-1}, or (N + alpha)^{-1} a_k a_l when k, l <= 0.
LocalizedElement make_x(std::size_t dim, const Rational& alpha, int k, int l);
/// y_{k0} = x_{-k,k}.
LocalizedElement make_yk0(std::size_t dim, const Rational& alpha, int k);

/// Parseable text: a(k), ad(k), N / N(k) and y(n) factors.
std::string to_string(const LocalizedElement& x);

}  // namespace weylps
