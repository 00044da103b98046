#pragma once

// Independent reference implementations. None of these call into the closed-form
// product rule, the membership decision procedure or the localized algebra.

#include <cmath>
#include <map>
#include <optional>
#include <vector>

#include "weylps/certificates.hpp"
#include "weylps/weyl_algebra.hpp"

namespace weylps::oracle {

/// Words in the generators: +j is a_j, -j is a_{-j}.
using Word = std::vector<int>;
using WordSum = std::map<Word, Scalar>;

inline Word word_of(const MultiIndexPair& m) {
  Word w;
  for (std::size_t j = 0; j < m.dim(); ++j) w.insert(w.end(), m.k[j], static_cast<int>(j + 1));
  for (std::size_t j = 0; j < m.dim(); ++j) w.insert(w.end(), m.l[j], -static_cast<int>(j + 1));
  return w;
}

/// Annihilators first, each block by mode.
inline int rank(int g) { return g > 0 ? g : 1000 - g; }

/// Normal ordering by repeated adjacent swaps a_{-k} a_k -> a_k a_{-k} - 1.
inline WeylElement rewrite(std::size_t dim, WordSum pending) {
  WeylElement out(dim);
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Scalar& c = node.mapped();
    std::size_t i = 0;
    while (i + 1 < w.size() && rank(w[i]) <= rank(w[i + 1])) ++i;
    if (i + 1 >= w.size()) {
      MultiIndexPair m{std::vector<unsigned>(dim, 0), std::vector<unsigned>(dim, 0)};
      for (int g : w) (g > 0 ? m.k : m.l)[static_cast<std::size_t>(std::abs(g) - 1)] += 1;
      out.add_term(m, c);
      continue;
    }
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    pending[swapped] += c;
    if (w[i] == -w[i + 1]) {
      Word shorter = w;
      shorter.erase(shorter.begin() + static_cast<long>(i), shorter.begin() + static_cast<long>(i) + 2);
      pending[shorter] -= c;
    }
  }
  return out;
}

inline WeylElement product(const WeylElement& x, const WeylElement& y) {
  WordSum words;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      Word w = word_of(mx);
      Word wy = word_of(my);
      w.insert(w.end(), wy.begin(), wy.end());
      words[w] += cx * cy;
    }
  }
  return rewrite(x.dim(), std::move(words));
}

/// Nonnegativity of a real polynomial of degree <= 2 on R, by cases.
inline bool quadratic_nonnegative(const Rational& c0, const Rational& c1, const Rational& c2) {
  if (c2 == 0) return c1 == 0 && c0 >= 0;
  return c2 > 0 && c1 * c1 - 4 * c2 * c0 <= 0;
}

/// p = s_0 + nu s_1 + nu(nu-1) s_2 with k + deg s_k <= deg p <= 2 forces s_1 = c_1 and
/// s_2 = c_2 constant and s_0 quadratic. Scans (c_1, c_2) on the grid of spacing
/// 1/(refine * lcm of the coefficient denominators).
inline bool grid_feasible(const NPolynomial& p, long refine) {
  int deg = p.degree();
  if (deg < 0) return true;
  mpz_class lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  const long steps = refine * lcm.get_si();
  Rational p0 = p.coefficient(0), p1 = p.coefficient(1), p2 = p.coefficient(2);
  // (p1 - c1 + c2)^2 <= 4 (p2 - c2) p0 bounds c1 by |p1| + 2 p2 + p0
  Rational c1_max = abs(p1) + 2 * abs(p2) + abs(p0);
  auto floor_of = [](const Rational& x) { return mpz_class(x.get_num() / x.get_den()).get_si(); };
  long c1_count = floor_of(Rational(c1_max * steps));
  long c2_count = deg == 2 ? floor_of(Rational(p2 * steps)) : 0;
  for (long a = 0; a <= c2_count; ++a) {
    Rational c2 = Rational(a) / steps;
    for (long b = 0; b <= c1_count; ++b) {
      Rational c1 = Rational(b) / steps;
      if (deg < 1 && c1 != 0) continue;
      // s_0 = p - c_1 nu - c_2 (nu^2 - nu)
      if (quadratic_nonnegative(p0, p1 - c1 + c2, p2 - c2)) return true;
    }
  }
  return false;
}

/// First n <= limit with p(n) <= 0 (or < 0 when not strict).
inline std::optional<long> naturals_counterexample(const NPolynomial& p, long limit, bool strict) {
  for (long n = 0; n <= limit; ++n) {
    Rational v = p.eval(Rational(n));
    if (strict ? v <= 0 : v < 0) return n;
  }
  return std::nullopt;
}

/// <(x^k)^* e_0, (x^n)^* e_0> in double precision from the Fock matrix elements:
/// (x^n)^* e_0 = prod_j (y_0 a_{-j})^{n_j} e_0 applied right to left as in x^n = x_1^{n_1}..x_d^{n_d}.
inline double gram_numeric(const std::vector<unsigned>& k, const std::vector<unsigned>& n, double alpha) {
  if (k != n) return 0.0;
  // (x^n)^* = (x_d^*)^{n_d} ... (x_1^*)^{n_1}; x_1^* acts first.
  double amplitude = 1.0;
  std::vector<unsigned> state(n.size(), 0);
  unsigned total = 0;
  for (std::size_t j = 0; j < n.size(); ++j) {
    for (unsigned r = 0; r < n[j]; ++r) {
      amplitude *= std::sqrt(static_cast<double>(state[j] + 1));
      state[j] += 1;
      total += 1;
      amplitude /= (total + alpha);
    }
  }
  return amplitude * amplitude;
}

}  // namespace weylps::oracle
