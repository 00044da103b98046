#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylps/localized.hpp"
#include "weylps/upoly.hpp"

namespace weylps {

/// 2 if i, j > 0; 1 if one index is 0 and the other positive; 0 otherwise.
int t_weight(int i, int j);

enum class RelationId {
  r1, r2, r3, r4, r5, r6, r6_unsquared, r7, r8, r9, r10, r11,
  xklstar, lemma41i, lemma41ii, ynullpos, xkery_consequence
};

std::string relation_name(RelationId id);
/// Accepts the names produced by relation_name. Throws std::invalid_argument.
RelationId parse_relation_name(const std::string& name);

/// Index assignment. Each relation reads the fields it needs:
///   r1: n, m (y_n, y_m)          r3: k, l (first form when l >= 0, second form with -l when l < 0)
///   r4, r11, xklstar: k, l       r5: k, n        r6, r6_unsquared, r8, r9: k, l
///   r7, xkery_consequence: k     r10: i, j, k, l
///   lemma41i: k, multi           lemma41ii: k, r
struct RelationParams {
  int i = 0, j = 0, k = 0, l = 0;
  int n = 0, m = 0;
  unsigned r = 0;
  std::vector<unsigned> multi{};
};

struct RelationResult {
  RelationId id;
  std::string label;  // e.g. "r4(k=1,l=-2)"
  bool holds = false;
  /// First nonzero difference (LHS - RHS); for r10 the offending commutator.
  std::optional<LocalizedElement> difference;
};

/// Computes LHS - RHS exactly. Throws std::invalid_argument on malformed params.
RelationResult verify_relation(RelationId id, std::size_t dim, const Rational& alpha, const RelationParams& params);

/// Every admissible instance with shift parameters |n| <= max_n and r <= max_n.
/// r6 with an unsquared (1 - y_2) is only included when include_unsquared_r6 is set.
std::vector<RelationResult> relation_suite(std::size_t dim, const Rational& alpha, int max_n = 3,
                                           bool include_unsquared_r6 = false);

/// y_0^n a_{i_1} ... a_{i_{2n}} = f_1(y_0) x_{i_1 i_2} ... f_n(y_0) x_{i_{2n-1} i_{2n}}.
struct Lemma32Factorization {
  std::vector<int> indices;
  std::vector<UPoly<Rational>> f;  // polynomials in y_0, low-to-high coefficients
  bool verified = false;           // exact equality with the direct product
  /// f_j(0) for each j; the construction always yields 1.
  std::vector<Rational> constant_terms() const;
  /// The right-hand side assembled in the localized algebra.
  LocalizedElement product(std::size_t dim, const Rational& alpha) const;
};

Lemma32Factorization lemma32_factorize(std::size_t dim, const Rational& alpha, const std::vector<int>& indices);

/// p(y_0) as a localized element.
LocalizedElement y0_polynomial(std::size_t dim, const Rational& alpha, const UPoly<Rational>& p);

struct Sandwich {
  LocalizedElement value;  // y_0^n c y_0^n
  bool degree_ok = true;   // degree(c) <= 4n
};

Sandwich y0_sandwich(const WeylElement& c, const Rational& alpha, unsigned n);

/// The same sandwich assembled monomial by monomial from the factorizations
/// y_0^n a..a = f x .. f x and its adjoint. Requires degree(c) <= 4n.
LocalizedElement y0_sandwich_factorized(const WeylElement& c, const Rational& alpha, unsigned n);

}  // namespace weylps
