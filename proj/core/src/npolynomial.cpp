#include <sstream>
#include <stdexcept>

#include "weylps/certificates.hpp"

namespace weylps {

NPolynomial falling_factorial(unsigned k) {
  NPolynomial out = NPolynomial::constant(1);
  for (unsigned i = 0; i < k; ++i) out = out * NPolynomial::linear(Rational(-static_cast<long>(i)));
  return out;
}

NPolynomial c_epsilon(const Rational& epsilon) {
  return NPolynomial::linear(-1) * NPolynomial::linear(-2) + NPolynomial::constant(epsilon);
}

NPolynomial b_polynomial(const Rational& alpha, const std::vector<int>& shifts) {
  NPolynomial out = NPolynomial::constant(1);
  for (int n : shifts) out = out * NPolynomial::linear(alpha + n);
  return out;
}

NPolynomial expand_levels(const std::vector<Level>& levels) {
  NPolynomial out;
  for (const auto& level : levels) out = out + falling_factorial(level.k) * level.s;
  return out;
}

WeylElement to_weyl(const NPolynomial& p) {
  std::vector<Scalar> coeffs;
  for (const auto& c : p.coefficients()) coeffs.emplace_back(c);
  return from_n_polynomial(1, coeffs);
}

std::optional<NPolynomial> to_n_polynomial(const WeylElement& c) {
  if (c.dim() != 1) return std::nullopt;
  NPolynomial out;
  for (const auto& [e, coeff] : c.terms()) {
    if (e.k[0] != e.l[0] || !coeff.is_rational()) return std::nullopt;
    // a^k a_-^k = (N + 1)(N + 2)...(N + k)
    NPolynomial term = NPolynomial::constant(coeff[Scalar::kOne]);
    for (unsigned i = 1; i <= e.k[0]; ++i) term = term * NPolynomial::linear(Rational(i));
    out = out + term;
  }
  return out;
}

std::string to_string(const NPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int j = p.degree(); j >= 0; --j) {
    const Rational c = p.coefficient(static_cast<std::size_t>(j));
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    std::string mono = j == 0 ? "" : (j == 1 ? "N" : "N^" + std::to_string(j));
    if (mono.empty()) {
      out << to_string(mag);
    } else if (mag == 1) {
      out << mono;
    } else {
      out << to_string(mag) << "*" << mono;
    }
  }
  return out.str();
}

NPolynomial odd_case_reduce(const NPolynomial& p) { return NPolynomial::linear(1) * p.shifted(Rational(1)); }

WeylElement odd_case_reduce(const WeylElement& c) {
  if (c.dim() != 1) throw std::invalid_argument("odd-case reduction is implemented for d = 1");
  if (!is_hermitean(c)) throw std::invalid_argument("element is not hermitean");
  const auto deg = degree(c);
  if (!deg || *deg % 4 != 2) throw std::invalid_argument("degree must be 2 mod 4");
  return build_ctilde(c);
}

}  // namespace weylps
