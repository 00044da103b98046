#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "weylps/certificates.hpp"
#include "weylps/localized.hpp"
#include "weylps/weyl_algebra.hpp"

namespace weylps::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational small_rational(Rng& rng, int range = 3, int max_den = 3) {
  return Rational(uniform_int(rng, -range, range)) / uniform_int(rng, 1, max_den);
}

/// Mostly rational, sometimes with i or sqrt2 parts.
inline Scalar small_scalar(Rng& rng) {
  Scalar s(small_rational(rng));
  switch (uniform_int(rng, 0, 5)) {
    case 0: s += Scalar(small_rational(rng)) * Scalar::i(); break;
    case 1: s += Scalar(small_rational(rng)) * Scalar::sqrt2(); break;
    default: break;
  }
  return s;
}

inline MultiIndexPair random_monomial(Rng& rng, std::size_t dim, unsigned max_degree) {
  MultiIndexPair m{std::vector<unsigned>(dim, 0), std::vector<unsigned>(dim, 0)};
  unsigned deg = static_cast<unsigned>(uniform_int(rng, 0, static_cast<int>(max_degree)));
  for (unsigned j = 0; j < deg; ++j) {
    auto mode = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(dim) - 1));
    (uniform_int(rng, 0, 1) ? m.k : m.l)[mode] += 1;
  }
  return m;
}

inline WeylElement random_weyl(Rng& rng, std::size_t dim, unsigned max_degree, int max_terms = 4) {
  WeylElement x(dim);
  int terms = uniform_int(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) x.add_term(random_monomial(rng, dim, max_degree), small_scalar(rng));
  return x;
}

/// Nonzero random element.
inline WeylElement random_nonzero_weyl(Rng& rng, std::size_t dim, unsigned max_degree, int max_terms = 4) {
  for (;;) {
    auto x = random_weyl(rng, dim, max_degree, max_terms);
    if (!x.is_zero()) return x;
  }
}

inline WeylElement random_hermitean(Rng& rng, std::size_t dim, unsigned max_degree) {
  auto x = random_weyl(rng, dim, max_degree);
  return x + adjoint(x);
}

/// Sums of short products of a(k), ad(k), y(n) and N(k).
inline LocalizedElement random_localized(Rng& rng, std::size_t dim, const Rational& alpha, int max_terms = 3,
                                         int max_factors = 3) {
  auto result = LocalizedElement(dim, alpha);
  int terms = uniform_int(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    auto product = LocalizedElement::constant(dim, alpha, small_scalar(rng));
    int factors = uniform_int(rng, 0, max_factors);
    for (int f = 0; f < factors; ++f) {
      int d = static_cast<int>(dim);
      switch (uniform_int(rng, 0, 3)) {
        case 0: product = product * make_generator(dim, alpha, uniform_int(rng, 1, d)); break;
        case 1: product = product * make_generator(dim, alpha, -uniform_int(rng, 1, d)); break;
        case 2: product = product * make_y(dim, alpha, uniform_int(rng, -2, 2)); break;
        default: product = product * make_number(dim, alpha, uniform_int(rng, 1, d)); break;
      }
    }
    result += product;
  }
  return result;
}

inline NPolynomial random_npoly(Rng& rng, int max_degree, int range = 4, int max_den = 4) {
  std::vector<Rational> c(static_cast<std::size_t>(uniform_int(rng, 0, max_degree) + 1));
  for (auto& v : c) v = small_rational(rng, range, max_den);
  return NPolynomial(c);
}

/// lambda (nu - r_1)(nu - r_2) with m < r_1 <= r_2 < m + 1, quarter-integral roots.
/// Positive on the naturals; membership depends on the gap.
inline NPolynomial random_gap_quadratic(Rng& rng) {
  int m = uniform_int(rng, 0, 2);
  int u = uniform_int(rng, 1, 3), v = uniform_int(rng, 1, 3);
  Rational r1 = m + Rational(std::min(u, v)) / 4, r2 = m + Rational(std::max(u, v)) / 4;
  Rational lambda(uniform_int(rng, 1, 2));
  return NPolynomial(std::vector<Rational>{lambda * r1 * r2, -lambda * (r1 + r2), lambda});
}

/// Degree <= 2, strictly positive on the naturals; mixes uniform draws with gap quadratics.
inline NPolynomial random_positive_quadratic(Rng& rng) {
  for (;;) {
    auto p = uniform_int(rng, 0, 1) ? random_gap_quadratic(rng) : random_npoly(rng, 2, 6, 4);
    bool positive = !(p.degree() == 2 && p.lead() < 0) && !(p.degree() == 1 && p.lead() < 0);
    for (long n = 0; positive && n <= 200; ++n) positive = p.eval(Rational(n)) > 0;
    if (positive) return p;
  }
}

}  // namespace weylps::testing
