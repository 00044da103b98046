#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylps/localized.hpp"
#include "weylps/weyl_algebra.hpp"

namespace weylps {

using Occupation = std::vector<unsigned>;

/// Finitely supported vector sum_n v_n e_n with complex float amplitudes in the
/// orthonormal basis e_n.
struct FockVector {
  std::size_t dim = 1;
  std::map<Occupation, std::complex<double>> amplitudes;

  static FockVector basis(const Occupation& n);
  void add(const Occupation& n, std::complex<double> value);
};

/// Exact vector sum_n v_n f_n in the unnormalized basis f_n = a_{-1}^{n_1}..a_{-d}^{n_d} e_0,
/// where e_n = f_n / sqrt(n!). All matrix coefficients are rational in this basis.
struct ExactFockVector {
  std::size_t dim = 1;
  std::map<Occupation, Scalar> amplitudes;

  static ExactFockVector vacuum(std::size_t dim);
  static ExactFockVector basis(const Occupation& n);
  void add(const Occupation& n, const Scalar& value);
  bool is_zero() const { return amplitudes.empty(); }
  friend bool operator==(const ExactFockVector&, const ExactFockVector&) = default;
};

/// <u, v>, antilinear in u; uses <f_m, f_n> = n! delta_{mn}.
Scalar inner(const ExactFockVector& u, const ExactFockVector& v);
std::complex<double> inner(const FockVector& u, const FockVector& v);

FockVector apply(const WeylElement& x, const FockVector& v);
FockVector apply(const LocalizedElement& x, const FockVector& v);
ExactFockVector apply(const WeylElement& x, const ExactFockVector& v);
ExactFockVector apply(const LocalizedElement& x, const ExactFockVector& v);

/// Multi-indices with |n| <= level in graded-lexicographic order.
std::vector<Occupation> basis_states(std::size_t dim, unsigned level);

/// Entries <e_m, x e_n> over basis_states(dim, level), row-major.
struct CompressedMatrix {
  unsigned level = 0;
  std::vector<Occupation> states;
  std::vector<std::complex<double>> entries;

  std::size_t size() const { return states.size(); }
  std::complex<double> at(std::size_t row, std::size_t col) const { return entries[row * states.size() + col]; }
  bool is_hermitean(double tolerance = 1e-12) const;
};

CompressedMatrix compressed_matrix(const WeylElement& x, unsigned level);
CompressedMatrix compressed_matrix(const LocalizedElement& x, unsigned level);

struct MinEigResult {
  bool falsified = false;
  unsigned level = 0;           // L
  unsigned interior_level = 0;  // L - degree(c)
  double value = 0;             // smallest eigenvalue of the interior block minus epsilon
  std::optional<Rational> exact_value;  // present when the interior block is diagonal
  FockVector witness;                   // eigenvector for the smallest eigenvalue
  Occupation dominant_state;            // basis state carrying the largest witness amplitude
};

inline constexpr double kMinEigTolerance = 1e-9;

/// Falsification test for c - epsilon >= 0 on vectors supported in |n| <= L - degree(c).
/// Throws std::invalid_argument when c is not hermitean or L <= degree(c).
MinEigResult min_eig_interior(const WeylElement& c, const Rational& epsilon, unsigned level);

/// <(x^k)^* e_0, (x^n)^* e_0> with x_j = a_j (N + alpha)^{-1}, computed exactly.
Rational gram_lemma42(const Occupation& k, const Occupation& n, const Rational& alpha);
/// n_1! ... n_d! / ((1 + alpha) ... (|n| + alpha))^2 * delta_{k,n}.
Rational gram_closed_form(const Occupation& k, const Occupation& n, const Rational& alpha);

/// x^n = x_1^{n_1} ... x_d^{n_d}.
LocalizedElement x_power(const Occupation& n, const Rational& alpha);

std::string to_string(const Occupation& n);

}  // namespace weylps
