#pragma once

#include <map>
#include <string>
#include <vector>

#include "weylps/scalar.hpp"

namespace weylps {

/// Commutative polynomial in nu_1..nu_d with Scalar coefficients.
class MPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using Terms = std::map<Exponents, Scalar>;

  MPoly() = default;
  explicit MPoly(std::size_t dim) : dim_(dim) {}
  static MPoly constant(std::size_t dim, const Scalar& value);
  /// nu_mode for mode in 1..d.
  static MPoly variable(std::size_t dim, std::size_t mode);
  /// nu_1 + ... + nu_d + c.
  static MPoly total_plus(std::size_t dim, const Rational& c);

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for zero.
  int degree() const;
  Scalar constant_term() const;

  void add_term(const Exponents& e, const Scalar& c);
  MPoly conj() const;
  /// p(nu + t).
  MPoly shifted(const std::vector<int>& t) const;
  Scalar evaluate(const std::vector<Rational>& nu) const;

  MPoly& operator+=(const MPoly& y);
  MPoly& operator-=(const MPoly& y);
  MPoly& operator*=(const Scalar& s);
  friend MPoly operator+(MPoly x, const MPoly& y) { return x += y; }
  friend MPoly operator-(MPoly x, const MPoly& y) { return x -= y; }
  friend MPoly operator*(const Scalar& s, MPoly x) { return x *= s; }
  friend MPoly operator*(const MPoly& x, const MPoly& y);
  friend bool operator==(const MPoly&, const MPoly&) = default;

  /// Quotient and remainder by nu_1 + ... + nu_d + c; the remainder is free of nu_1.
  std::pair<MPoly, MPoly> divide_linear(const Rational& c) const;

 private:
  std::size_t dim_ = 1;
  Terms terms_;
};

/// numerator(nu) / prod_n (nu_1 + ... + nu_d + alpha + n)^{m_n}, kept reduced.
class ShiftRational {
 public:
  using Denominator = std::map<int, unsigned>;

  ShiftRational() = default;
  ShiftRational(std::size_t dim, Rational alpha);
  ShiftRational(MPoly numerator, Rational alpha, Denominator denominator = {});

  static ShiftRational constant(std::size_t dim, const Rational& alpha, const Scalar& value);
  /// (|nu| + alpha + n)^{-1}.
  static ShiftRational resolvent(std::size_t dim, const Rational& alpha, int n);

  std::size_t dim() const { return num_.dim(); }
  const Rational& alpha() const { return alpha_; }
  const MPoly& numerator() const { return num_; }
  const Denominator& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// deg numerator - number of denominator factors (with multiplicity).
  int weight() const;

  ShiftRational conj() const;
  /// f(nu + t).
  ShiftRational shifted(const std::vector<int>& t) const;
  Scalar evaluate(const std::vector<Rational>& nu) const;

  ShiftRational& operator+=(const ShiftRational& y);
  ShiftRational& operator-=(const ShiftRational& y);
  ShiftRational& operator*=(const Scalar& s);
  friend ShiftRational operator+(ShiftRational x, const ShiftRational& y) { return x += y; }
  friend ShiftRational operator-(ShiftRational x, const ShiftRational& y) { return x -= y; }
  friend ShiftRational operator*(const ShiftRational& x, const ShiftRational& y);
  friend bool operator==(const ShiftRational& x, const ShiftRational& y) {
    return x.alpha_ == y.alpha_ && x.num_ == y.num_ && x.den_ == y.den_;
  }

 private:
  void reduce();

  MPoly num_;
  Rational alpha_;
  Denominator den_;
};

/// Parseable text using N(k) for nu_k and y(n) for the resolvents.
std::string to_string(const MPoly& p);
std::string to_string(const ShiftRational& f);

}  // namespace weylps
