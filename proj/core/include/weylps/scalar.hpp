#pragma once

#include <array>
#include <complex>
#include <string>

#include "weylps/rational.hpp"

namespace weylps {

/// Element a + b*sqrt(2) of the real field Q(sqrt 2), with its exact order.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(int value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  double to_double() const;

  QSqrt2 inverse() const;

  friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend QSqrt2 operator-(const QSqrt2& x) { return {-x.a_, -x.b_}; }
  friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
    return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y) { return x * y.inverse(); }
  QSqrt2& operator+=(const QSqrt2& y) { return *this = *this + y; }
  QSqrt2& operator-=(const QSqrt2& y) { return *this = *this - y; }
  QSqrt2& operator*=(const QSqrt2& y) { return *this = *this * y; }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  Rational a_;
  Rational b_;
};

/// Exact sign of a + b*sqrt(2).
int sign(const QSqrt2& value);
std::string to_string(const QSqrt2& value);

/// Exact element r0 + r1*i + r2*sqrt2 + r3*i*sqrt2 of Q(i, sqrt 2).
class Scalar {
 public:
  enum Component : std::size_t { kOne = 0, kI = 1, kSqrt2 = 2, kISqrt2 = 3 };

  Scalar() = default;
  Scalar(int value) : c_{Rational(value), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value) : c_{value, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational r0, Rational r1, Rational r2, Rational r3)
      : c_{std::move(r0), std::move(r1), std::move(r2), std::move(r3)} {}

  static Scalar i() { return {0, 1, 0, 0}; }
  static Scalar sqrt2() { return {0, 0, 1, 0}; }
  static Scalar from_parts(const QSqrt2& re, const QSqrt2& im) {
    return {re.rational_part(), im.rational_part(), re.sqrt2_part(), im.sqrt2_part()};
  }

  const Rational& operator[](std::size_t component) const { return c_[component]; }
  QSqrt2 real() const { return {c_[kOne], c_[kSqrt2]}; }
  QSqrt2 imag() const { return {c_[kI], c_[kISqrt2]}; }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_real() const { return c_[kI] == 0 && c_[kISqrt2] == 0; }
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  /// Complex conjugation: i -> -i, sqrt2 fixed.
  Scalar conj() const { return {c_[0], -c_[1], c_[2], -c_[3]}; }
  Scalar inverse() const;
  std::complex<double> to_complex() const;

  Scalar& operator+=(const Scalar& y);
  Scalar& operator-=(const Scalar& y);
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator-(const Scalar& x) { return {-x.c_[0], -x.c_[1], -x.c_[2], -x.c_[3]}; }
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }
  friend bool operator==(const Scalar& x, const Scalar& y) { return x.c_ == y.c_; }

 private:
  std::array<Rational, 4> c_;
};

/// Parseable form, e.g. "1/2", "-3*i", "(1 + sqrt2)".
/// A sum of several components is wrapped in parentheses when `wrap_sums` is set.
std::string to_string(const Scalar& value, bool wrap_sums = false);

}  // namespace weylps
