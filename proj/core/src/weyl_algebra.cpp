#include "weylps/weyl_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace weylps {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

void require_mode(std::size_t dim, int mode, bool allow_zero) {
  if (mode < (allow_zero ? 0 : 1) || static_cast<std::size_t>(mode) > dim) {
    throw std::invalid_argument("invalid mode " + std::to_string(mode) + " for d = " + std::to_string(dim));
  }
}

// a_{-}^l a^m = sum_r (-1)^r r! C(l,r) C(m,r) a^{m-r} a_{-}^{l-r}.
Integer reorder_coefficient(unsigned l, unsigned m, unsigned r) {
  Integer c = factorial(r) * binomial(l, r) * binomial(m, r);
  return (r % 2 == 1) ? Integer(-c) : c;
}

}  // namespace

unsigned MultiIndexPair::degree() const {
  return std::accumulate(k.begin(), k.end(), 0u) + std::accumulate(l.begin(), l.end(), 0u);
}

bool PbwOrder::operator()(const MultiIndexPair& x, const MultiIndexPair& y) const {
  unsigned dx = x.degree(), dy = y.degree();
  if (dx != dy) return dx > dy;
  if (x.k != y.k) return x.k > y.k;
  return x.l > y.l;
}

WeylElement::WeylElement(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("dimension must be at least 1");
}

WeylElement WeylElement::constant(std::size_t dim, const Scalar& value) {
  WeylElement result(dim);
  result.add_term(MultiIndexPair{std::vector<unsigned>(dim, 0), std::vector<unsigned>(dim, 0)}, value);
  return result;
}

WeylElement WeylElement::generator(std::size_t dim, int index) {
  if (index == 0) return one(dim);
  int mode = index > 0 ? index : -index;
  require_mode(dim, mode, false);
  MultiIndexPair e{std::vector<unsigned>(dim, 0), std::vector<unsigned>(dim, 0)};
  (index > 0 ? e.k : e.l)[mode - 1] = 1;
  return monomial(e);
}

WeylElement WeylElement::monomial(const MultiIndexPair& exponents, const Scalar& coefficient) {
  if (exponents.k.size() != exponents.l.size()) throw std::invalid_argument("malformed multi-index pair");
  WeylElement result(exponents.dim());
  result.add_term(exponents, coefficient);
  return result;
}

Scalar WeylElement::coefficient(const MultiIndexPair& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Scalar() : it->second;
}

void WeylElement::add_term(const MultiIndexPair& exponents, const Scalar& coefficient) {
  if (exponents.k.size() != dim_ || exponents.l.size() != dim_) {
    throw std::invalid_argument("multi-index length does not match dimension");
  }
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylElement& WeylElement::operator+=(const WeylElement& y) {
  require_same_dim(dim_, y.dim_);
  for (const auto& [e, c] : y.terms_) add_term(e, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& y) {
  require_same_dim(dim_, y.dim_);
  for (const auto& [e, c] : y.terms_) add_term(e, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

WeylElement operator*(const WeylElement& x, const WeylElement& y) { return mul(x, y); }

WeylElement mul(const WeylElement& x, const WeylElement& y) {
  require_same_dim(x.dim(), y.dim());
  const std::size_t d = x.dim();
  WeylElement result(d);
  std::vector<unsigned> r(d), bound(d);
  MultiIndexPair e{std::vector<unsigned>(d), std::vector<unsigned>(d)};
  for (const auto& [ex, cx] : x.terms()) {
    for (const auto& [ey, cy] : y.terms()) {
      // Only a_{-j}^{lx_j} a_j^{ky_j} needs reordering, mode by mode.
      for (std::size_t j = 0; j < d; ++j) {
        bound[j] = std::min(ex.l[j], ey.k[j]);
        r[j] = 0;
      }
      const Scalar base = cx * cy;
      while (true) {
        Integer coeff = 1;
        for (std::size_t j = 0; j < d; ++j) {
          coeff *= reorder_coefficient(ex.l[j], ey.k[j], r[j]);
          e.k[j] = ex.k[j] + ey.k[j] - r[j];
          e.l[j] = ex.l[j] + ey.l[j] - r[j];
        }
        result.add_term(e, base * Scalar(Rational(coeff)));
        std::size_t j = 0;
        while (j < d && r[j] == bound[j]) r[j++] = 0;
        if (j == d) break;
        ++r[j];
      }
    }
  }
  return result;
}

WeylElement adjoint(const WeylElement& x) {
  // (a^k a_-^l)^* = a^l a_-^k, which is already in normal order.
  WeylElement result(x.dim());
  for (const auto& [e, c] : x.terms()) {
    result.add_term(MultiIndexPair{e.l, e.k}, c.conj());
  }
  return result;
}

bool is_hermitean(const WeylElement& x) { return adjoint(x) == x; }

Degree degree(const WeylElement& x) {
  if (x.is_zero()) return std::nullopt;
  return x.terms().begin()->first.degree();
}

WeylElement number_operator(std::size_t dim, int mode) {
  require_mode(dim, mode, true);
  if (mode == 0) {
    WeylElement total(dim);
    for (std::size_t k = 1; k <= dim; ++k) total += number_operator(dim, static_cast<int>(k));
    return total;
  }
  return mul(WeylElement::generator(dim, -mode), WeylElement::generator(dim, mode));
}

WeylElement from_n_polynomial(std::size_t dim, const std::vector<Scalar>& coefficients) {
  const WeylElement n = number_operator(dim, 0);
  WeylElement result(dim);
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    result = mul(result, n);
    result += WeylElement::constant(dim, *it);
  }
  return result;
}

WeylElement build_ctilde(const WeylElement& c) {
  const std::size_t d = c.dim();
  WeylElement result(d);
  for (std::size_t j = 1; j <= d; ++j) {
    int mode = static_cast<int>(j);
    result += mul(WeylElement::generator(d, mode), mul(c, WeylElement::generator(d, -mode)));
  }
  return result;
}

WeylElement position(std::size_t dim, int mode) {
  require_mode(dim, mode, false);
  const Scalar inv_sqrt2(0, 0, Rational(1, 2), 0);
  return inv_sqrt2 * (WeylElement::generator(dim, mode) + WeylElement::generator(dim, -mode));
}

WeylElement momentum(std::size_t dim, int mode) {
  require_mode(dim, mode, false);
  const Scalar i_over_sqrt2(0, 0, 0, Rational(1, 2));
  return i_over_sqrt2 * (WeylElement::generator(dim, -mode) - WeylElement::generator(dim, mode));
}

WeylElement power(const WeylElement& x, unsigned exponent) {
  WeylElement result = WeylElement::one(x.dim());
  WeylElement base = x;
  while (exponent > 0) {
    if (exponent & 1u) result = mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

}  // namespace weylps
