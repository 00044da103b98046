#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weylps/rational.hpp"
#include "weylps/scalar.hpp"

namespace weylps {

/// Dense univariate polynomial over an exactly ordered field (Rational or QSqrt2).
/// Coefficients are stored low-to-high with trailing zeros trimmed.
template <typename F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<F> coefficients) : c_(std::move(coefficients)) { trim(); }
  static UPoly constant(const F& value) { return UPoly(std::vector<F>{value}); }
  /// x + shift
  static UPoly linear(const F& shift) { return UPoly(std::vector<F>{shift, F(1)}); }
  static UPoly monomial(std::size_t exponent, const F& value = F(1)) {
    std::vector<F> c(exponent + 1);
    c[exponent] = value;
    return UPoly(std::move(c));
  }

  const std::vector<F>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  F lead() const { return c_.empty() ? F(0) : c_.back(); }
  F coefficient(std::size_t j) const { return j < c_.size() ? c_[j] : F(0); }

  F eval(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UPoly derivative() const {
    std::vector<F> d;
    for (std::size_t j = 1; j < c_.size(); ++j) d.push_back(c_[j] * F(static_cast<int>(j)));
    return UPoly(std::move(d));
  }

  /// p(x + shift)
  UPoly shifted(const F& shift) const {
    UPoly result;
    const UPoly lin = linear(shift);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) result = result * lin + constant(*it);
    return result;
  }

  UPoly monic() const {
    if (c_.empty()) return *this;
    return scaled(F(1) / c_.back());
  }

  UPoly scaled(const F& s) const {
    std::vector<F> c(c_);
    for (auto& v : c) v = v * s;
    return UPoly(std::move(c));
  }

  /// Quotient and remainder of Euclidean division.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<F> rem(c_);
    const int dd = divisor.degree();
    if (degree() < dd) return {UPoly(), *this};
    std::vector<F> quot(static_cast<std::size_t>(degree() - dd + 1));
    const F inv_lead = F(1) / divisor.lead();
    for (int j = degree(); j >= dd; --j) {
      F q = rem[static_cast<std::size_t>(j)] * inv_lead;
      quot[static_cast<std::size_t>(j - dd)] = q;
      if (sign(q) == 0) continue;
      for (int t = 0; t <= dd; ++t) {
        rem[static_cast<std::size_t>(j - dd + t)] -= q * divisor.c_[static_cast<std::size_t>(t)];
      }
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
  }

  friend UPoly operator+(const UPoly& x, const UPoly& y) {
    std::vector<F> c(std::max(x.c_.size(), y.c_.size()));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = x.coefficient(j) + y.coefficient(j);
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& x, const UPoly& y) {
    std::vector<F> c(std::max(x.c_.size(), y.c_.size()));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = x.coefficient(j) - y.coefficient(j);
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& x) { return x.scaled(F(-1)); }
  friend UPoly operator*(const UPoly& x, const UPoly& y) {
    if (x.is_zero() || y.is_zero()) return UPoly();
    std::vector<F> c(x.c_.size() + y.c_.size() - 1);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      for (std::size_t j = 0; j < y.c_.size(); ++j) c[i + j] += x.c_[i] * y.c_[j];
    }
    return UPoly(std::move(c));
  }
  friend bool operator==(const UPoly& x, const UPoly& y) { return x.c_ == y.c_; }

 private:
  void trim() {
    while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
  }

  std::vector<F> c_;
};

template <typename F>
UPoly<F> power(const UPoly<F>& p, unsigned exponent) {
  UPoly<F> result = UPoly<F>::constant(F(1));
  for (unsigned j = 0; j < exponent; ++j) result = result * p;
  return result;
}

/// Monic gcd (zero if both inputs are zero).
template <typename F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Yun's square-free decomposition: p = lead * prod_i f_i^i with f_i monic,
/// square-free and pairwise coprime. Entry i-1 holds f_i (possibly constant 1).
template <typename F>
std::vector<UPoly<F>> square_free_decomposition(const UPoly<F>& p) {
  std::vector<UPoly<F>> factors;
  if (p.degree() < 1) return factors;
  UPoly<F> a = p.monic();
  UPoly<F> b = a.derivative();
  UPoly<F> c = gcd(a, b);
  UPoly<F> w = a.divmod(c).first;
  UPoly<F> y = b.divmod(c).first;
  UPoly<F> z = y - w.derivative();
  while (w.degree() > 0) {
    UPoly<F> g = gcd(w, z);
    factors.push_back(g);
    w = w.divmod(g).first;
    y = z.divmod(g).first;
    z = y - w.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

/// Square-free part (monic) of p.
template <typename F>
UPoly<F> square_free_part(const UPoly<F>& p) {
  if (p.degree() < 1) return UPoly<F>::constant(F(1));
  return p.divmod(gcd(p, p.derivative())).first.monic();
}

/// Sturm chain p, p', -rem(p, p'), ...
template <typename F>
std::vector<UPoly<F>> sturm_chain(const UPoly<F>& p) {
  std::vector<UPoly<F>> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  UPoly<F> next = p.derivative();
  while (!next.is_zero()) {
    chain.push_back(next);
    const auto& prev = chain[chain.size() - 2];
    next = -prev.divmod(chain.back()).second;
  }
  return chain;
}

template <typename F>
int sign_variations_at(const std::vector<UPoly<F>>& chain, const Rational& x) {
  int variations = 0, last = 0;
  for (const auto& q : chain) {
    int s = sign(q.eval(F(x)));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

template <typename F>
int sign_variations_at_infinity(const std::vector<UPoly<F>>& chain, bool negative) {
  int variations = 0, last = 0;
  for (const auto& q : chain) {
    int s = sign(q.lead());
    if (negative && q.degree() % 2 == 1) s = -s;
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

/// Number of distinct real roots of p.
template <typename F>
int count_real_roots(const UPoly<F>& p) {
  if (p.degree() < 1) return 0;
  auto chain = sturm_chain(p);
  return sign_variations_at_infinity(chain, true) - sign_variations_at_infinity(chain, false);
}

/// Rational upper bound on |x| for x in the field.
inline Rational magnitude_bound(const Rational& x) { return abs(x); }
inline Rational magnitude_bound(const QSqrt2& x) {
  return abs(x.rational_part()) + abs(x.sqrt2_part()) * Rational(3, 2);
}
inline Rational lower_magnitude(const Rational& x) { return abs(x); }
inline Rational lower_magnitude(const QSqrt2& x) {
  // Bisect a rational bracket of sqrt2 until the image interval of x excludes zero.
  Rational lo(7, 5), hi(3, 2);
  while (true) {
    Rational v1 = x.rational_part() + x.sqrt2_part() * lo;
    Rational v2 = x.rational_part() + x.sqrt2_part() * hi;
    if (sgn(v1) == sgn(v2) && sgn(v1) != 0) return std::min(abs(v1), abs(v2));
    if (x.is_zero()) return Rational(0);
    Rational mid = (lo + hi) / 2;
    if (mid * mid < 2) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

/// Cauchy bound: all real roots lie in (-B, B).
template <typename F>
Rational cauchy_bound(const UPoly<F>& p) {
  Rational lead = lower_magnitude(p.lead());
  Rational m = 0;
  for (int j = 0; j < p.degree(); ++j) {
    Rational r = magnitude_bound(p.coefficient(static_cast<std::size_t>(j))) / lead;
    if (r > m) m = r;
  }
  return m + 1;
}

/// Half-open interval (lo, hi] containing exactly one root; lo == hi marks an exact rational root.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Isolates the distinct real roots of p (sorted, pairwise disjoint intervals of width <= max_width).
template <typename F>
std::vector<RootInterval> isolate_real_roots(const UPoly<F>& p, const Rational& max_width = Rational(1, 1000)) {
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  const UPoly<F> sq = square_free_part(p);
  const auto chain = sturm_chain(sq);
  const Rational bound = cauchy_bound(sq);
  auto count = [&](const Rational& a, const Rational& b) {
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
  };
  std::vector<RootInterval> stack{{-bound, bound}};
  while (!stack.empty()) {
    RootInterval iv = stack.back();
    stack.pop_back();
    int n = count(iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      if (sign(sq.eval(F(iv.hi))) == 0) {
        out.push_back({iv.hi, iv.hi});
        continue;
      }
      // Prefer a simple rational root if one sits inside.
      Rational simple = simplest_between(iv.lo, iv.hi);
      if (simple > iv.lo && sign(sq.eval(F(simple))) == 0) {
        out.push_back({simple, simple});
        continue;
      }
      while (iv.hi - iv.lo > max_width) {
        Rational mid = (iv.lo + iv.hi) / 2;
        if (sign(sq.eval(F(mid))) == 0) {
          iv = {mid, mid};
          break;
        }
        if (count(iv.lo, mid) == 1) {
          iv.hi = mid;
        } else {
          iv.lo = mid;
        }
      }
      out.push_back(iv);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    stack.push_back({iv.lo, mid});
    stack.push_back({mid, iv.hi});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.hi < b.hi; });
  return out;
}

}  // namespace weylps

namespace weylps {

/// p >= 0 on all of R: p == 0, or positive lead and every real root of even multiplicity.
template <typename F>
bool is_nonnegative_on_reals(const UPoly<F>& p) {
  if (p.is_zero()) return true;
  if (sign(p.lead()) < 0 || p.degree() % 2 == 1) return false;
  UPoly<F> odd_part = UPoly<F>::constant(F(1));
  const auto factors = square_free_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if ((i + 1) % 2 == 1) odd_part = odd_part * factors[i];
  }
  return count_real_roots(odd_part) == 0;
}

}  // namespace weylps
