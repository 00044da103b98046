#include "weylps/scalar.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace weylps {

double QSqrt2::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

QSqrt2 QSqrt2::inverse() const {
  Rational norm = a_ * a_ - 2 * b_ * b_;
  if (norm == 0) throw std::domain_error("division by zero in Q(sqrt2)");
  return {a_ / norm, -b_ / norm};
}

int sign(const QSqrt2& value) {
  int sa = sgn(value.rational_part());
  int sb = sgn(value.sqrt2_part());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with 2 b^2.
  Rational a2 = value.rational_part() * value.rational_part();
  Rational b2 = 2 * value.sqrt2_part() * value.sqrt2_part();
  return a2 > b2 ? sa : sb;
}

std::string to_string(const QSqrt2& value) {
  return to_string(Scalar(value.rational_part(), 0, value.sqrt2_part(), 0));
}

Scalar& Scalar::operator+=(const Scalar& y) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] += y.c_[k];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& y) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] -= y.c_[k];
  return *this;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  const auto& a = x.c_;
  const auto& b = y.c_;
  if (x.is_rational() && y.is_rational()) return Scalar(Rational(a[0] * b[0]));
  return {a[0] * b[0] - a[1] * b[1] + 2 * a[2] * b[2] - 2 * a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + 2 * (a[2] * b[3] + a[3] * b[2]),
          a[0] * b[2] + a[2] * b[0] - (a[1] * b[3] + a[3] * b[1]),
          a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1]};
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  if (is_rational()) return Scalar(Rational(1 / c_[0]));
  // x = u + v*sqrt2 with u, v Gaussian rationals; 1/x = (u - v sqrt2) / (u^2 - 2 v^2).
  Scalar u(c_[0], c_[1], 0, 0);
  Scalar v(c_[2], c_[3], 0, 0);
  Scalar w = u * u - Scalar(2) * v * v;
  Rational modulus = w.c_[0] * w.c_[0] + w.c_[1] * w.c_[1];
  Scalar w_inv(w.c_[0] / modulus, -w.c_[1] / modulus, 0, 0);
  return (u - v * sqrt2()) * w_inv;
}

std::complex<double> Scalar::to_complex() const {
  const double s = std::sqrt(2.0);
  return {c_[0].get_d() + s * c_[2].get_d(), c_[1].get_d() + s * c_[3].get_d()};
}

std::string to_string(const Scalar& value, bool wrap_sums) {
  static const char* const kSuffix[4] = {"", "i", "sqrt2", "i*sqrt2"};
  std::vector<std::string> parts;
  for (std::size_t k = 0; k < 4; ++k) {
    const Rational& r = value[k];
    if (r == 0) continue;
    std::string text;
    if (k == 0) {
      text = to_string(r);
    } else if (r == 1) {
      text = kSuffix[k];
    } else if (r == -1) {
      text = std::string("-") + kSuffix[k];
    } else {
      text = to_string(r) + "*" + kSuffix[k];
    }
    parts.push_back(std::move(text));
  }
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t j = 1; j < parts.size(); ++j) {
    if (parts[j].front() == '-') {
      out += " - " + parts[j].substr(1);
    } else {
      out += " + " + parts[j];
    }
  }
  if (wrap_sums && parts.size() > 1) return "(" + out + ")";
  return out;
}

}  // namespace weylps
