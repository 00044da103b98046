#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "weylps/upoly.hpp"
#include "weylps/weyl_algebra.hpp"

namespace weylps {

/// Homogeneous polynomial sum c_{k,l} z^k zbar^l with |k| + |l| == degree.
/// The exponent pair reuses MultiIndexPair: k for z, l for zbar.
struct TopSymbol {
  std::size_t dim = 1;
  unsigned degree = 0;
  std::map<MultiIndexPair, Scalar, PbwOrder> terms;

  bool is_zero() const { return terms.empty(); }
  /// Coefficient of (k,l) equals the conjugate of the coefficient of (l,k).
  bool is_hermitean() const;
  std::complex<double> evaluate(std::span<const std::complex<double>> z) const;

  friend bool operator==(const TopSymbol&, const TopSymbol&) = default;
};

/// Leading graded component of c with a_j -> z_j, a_{-j} -> zbar_j. Throws on c == 0.
TopSymbol top_symbol(const WeylElement& c);

/// Pointwise product in C[z, zbar].
TopSymbol symbol_product(const TopSymbol& x, const TopSymbol& y);

std::string to_string(const TopSymbol& s);

struct CertifiedPositive {
  Rational lower_bound;  // exact: s >= lower_bound > 0 on the unit sphere
};
struct CertifiedNegative {
  Rational upper_bound;  // exact: s <= upper_bound < 0 on the unit sphere
};
struct CertifiedZeroAt {
  std::vector<std::complex<double>> point;     // unit-sphere point (numeric)
  std::optional<std::vector<Scalar>> exact;    // present when the zero is at an exact point
};
struct HeuristicPositive {
  double sampled_min;
};
struct Inconclusive {
  std::string reason;
};

using SphereVerdict = std::variant<CertifiedPositive, CertifiedNegative, CertifiedZeroAt, HeuristicPositive, Inconclusive>;

struct SphereCheckOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 20101;
};

/// Decides whether the symbol is nonzero on the unit sphere. Exact for d == 1,
/// sampled (never certified) for d >= 2. Throws std::invalid_argument on
/// non-hermitean or odd-degree symbols.
SphereVerdict check_condition_ii(const TopSymbol& s, const SphereCheckOptions& options = {});

std::string verdict_name(const SphereVerdict& v);

namespace detail {
/// For d == 1: T(theta) = s(e^{i theta}); returns Q(t) = T * (1 + t^2)^M with
/// t = tan(theta/2), together with M and T(pi).
struct CirclePolynomial {
  UPoly<QSqrt2> q;
  unsigned half_degree = 0;
  QSqrt2 value_at_pi;
};
CirclePolynomial circle_polynomial(const TopSymbol& s);
double circle_value(const TopSymbol& s, double theta);
}  // namespace detail

}  // namespace weylps
