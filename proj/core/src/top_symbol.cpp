#include "weylps/top_symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace weylps {

bool TopSymbol::is_hermitean() const {
  for (const auto& [e, c] : terms) {
    auto it = terms.find(MultiIndexPair{e.l, e.k});
    if (it == terms.end() || !(it->second == c.conj())) return false;
  }
  return true;
}

std::complex<double> TopSymbol::evaluate(std::span<const std::complex<double>> z) const {
  if (z.size() != dim) throw std::invalid_argument("point dimension does not match symbol");
  std::complex<double> total = 0.0;
  for (const auto& [e, c] : terms) {
    std::complex<double> v = c.to_complex();
    for (std::size_t j = 0; j < dim; ++j) {
      v *= std::pow(z[j], static_cast<int>(e.k[j])) * std::pow(std::conj(z[j]), static_cast<int>(e.l[j]));
    }
    total += v;
  }
  return total;
}

TopSymbol top_symbol(const WeylElement& c) {
  auto n = degree(c);
  if (!n) throw std::invalid_argument("top symbol of the zero element is undefined");
  TopSymbol s;
  s.dim = c.dim();
  s.degree = *n;
  for (const auto& [e, coeff] : c.terms()) {
    if (e.degree() == *n) s.terms.emplace(e, coeff);
  }
  return s;
}

TopSymbol symbol_product(const TopSymbol& x, const TopSymbol& y) {
  if (x.dim != y.dim) throw std::invalid_argument("dimension mismatch");
  TopSymbol out;
  out.dim = x.dim;
  out.degree = x.degree + y.degree;
  for (const auto& [ex, cx] : x.terms) {
    for (const auto& [ey, cy] : y.terms) {
      MultiIndexPair e{ex.k, ex.l};
      for (std::size_t j = 0; j < x.dim; ++j) {
        e.k[j] += ey.k[j];
        e.l[j] += ey.l[j];
      }
      auto [it, inserted] = out.terms.try_emplace(e, cx * cy);
      if (!inserted) {
        it->second += cx * cy;
        if (it->second.is_zero()) out.terms.erase(it);
      }
    }
  }
  return out;
}

std::string to_string(const TopSymbol& s) {
  if (s.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : s.terms) {
    std::string factors;
    for (std::size_t j = 0; j < s.dim; ++j) {
      for (int pass = 0; pass < 2; ++pass) {
        unsigned p = pass == 0 ? e.k[j] : e.l[j];
        if (p == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += (pass == 0 ? "z(" : "zb(") + std::to_string(j + 1) + ")";
        if (p > 1) factors += "^" + std::to_string(p);
      }
    }
    std::string coeff = to_string(c, true);
    bool negative = coeff.front() == '-';
    if (negative) coeff = coeff.substr(1);
    if (first) {
      out << (negative ? "-" : "");
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (factors.empty()) {
      out << coeff;
    } else if (coeff == "1") {
      out << factors;
    } else {
      out << coeff << "*" << factors;
    }
  }
  return out.str();
}

namespace detail {

CirclePolynomial circle_polynomial(const TopSymbol& s) {
  if (s.dim != 1) throw std::invalid_argument("circle polynomial requires d = 1");
  // c_m for m = k - l.
  std::map<int, Scalar> by_frequency;
  for (const auto& [e, c] : s.terms) {
    by_frequency[static_cast<int>(e.k[0]) - static_cast<int>(e.l[0])] += c;
  }
  unsigned half = 0;
  for (const auto& [m, c] : by_frequency) {
    if (!c.is_zero()) half = std::max<unsigned>(half, static_cast<unsigned>(std::abs(m)));
  }
  const UPoly<QSqrt2> one_plus_t2(std::vector<QSqrt2>{QSqrt2(1), QSqrt2(0), QSqrt2(1)});
  CirclePolynomial out;
  out.half_degree = half;
  UPoly<QSqrt2> q;
  QSqrt2 at_pi(0);
  auto freq = [&](int m) {
    auto it = by_frequency.find(m);
    return it == by_frequency.end() ? Scalar() : it->second;
  };
  // Constant term c_0 (real for hermitean symbols).
  q = q + power(one_plus_t2, half).scaled(freq(0).real());
  at_pi += freq(0).real();
  for (unsigned m = 1; m <= half; ++m) {
    const Scalar cm = freq(static_cast<int>(m));
    if (cm.is_zero()) continue;
    // 2 Re[c_m (1 + i t)^{2m}] (1 + t^2)^{half - m}
    std::vector<QSqrt2> coeffs(2 * m + 1);
    for (unsigned j = 0; j <= 2 * m; ++j) {
      QSqrt2 binom(Rational(binomial(2 * m, j)));
      QSqrt2 re;
      switch (j % 4) {
        case 0: re = cm.real(); break;
        case 1: re = -cm.imag(); break;
        case 2: re = -cm.real(); break;
        default: re = cm.imag(); break;
      }
      coeffs[j] = QSqrt2(2) * binom * re;
    }
    q = q + UPoly<QSqrt2>(std::move(coeffs)) * power(one_plus_t2, half - m);
    QSqrt2 term = QSqrt2(2) * cm.real();
    at_pi += (m % 2 == 1) ? -term : term;
  }
  out.q = std::move(q);
  out.value_at_pi = at_pi;
  return out;
}

double circle_value(const TopSymbol& s, double theta) {
  std::complex<double> z = std::polar(1.0, theta);
  return s.evaluate(std::span<const std::complex<double>>(&z, 1)).real();
}

}  // namespace detail

namespace {

// T - lambda >= 0 on the circle, decided exactly.
bool circle_at_least(const detail::CirclePolynomial& cp, const Rational& lambda) {
  const UPoly<QSqrt2> one_plus_t2(std::vector<QSqrt2>{QSqrt2(1), QSqrt2(0), QSqrt2(1)});
  UPoly<QSqrt2> shifted = cp.q - power(one_plus_t2, cp.half_degree).scaled(QSqrt2(lambda));
  if (sign(cp.value_at_pi - QSqrt2(lambda)) < 0) return false;
  return is_nonnegative_on_reals(shifted);
}

Rational certified_bound(const TopSymbol& s, const detail::CirclePolynomial& cp, int orientation,
                         std::size_t samples) {
  // orientation = +1: largest found lambda > 0 with T >= lambda; -1: T <= -lambda.
  double sampled = std::numeric_limits<double>::infinity();
  const std::size_t n = std::max<std::size_t>(samples, 16);
  for (std::size_t j = 0; j < n; ++j) {
    double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    sampled = std::min(sampled, orientation * detail::circle_value(s, theta));
  }
  detail::CirclePolynomial oriented = cp;
  if (orientation < 0) {
    oriented.q = -cp.q;
    oriented.value_at_pi = -cp.value_at_pi;
  }
  std::vector<double> candidates{sampled, sampled * (1 - 1e-9), sampled * (1 - 1e-6), sampled * (1 - 1e-3)};
  double halving = sampled;
  for (int j = 0; j < 200; ++j) {
    halving /= 2;
    candidates.push_back(halving);
  }
  for (double c : candidates) {
    if (!(c > 0)) continue;
    Rational lambda = rationalize(c, 1000000);
    if (lambda <= 0) lambda = Rational(c);
    if (circle_at_least(oriented, lambda)) return orientation > 0 ? lambda : Rational(-lambda);
  }
  throw std::logic_error("no certified bound found for a definite symbol");
}

std::vector<std::complex<double>> unit_point(double t) {
  double denom = 1 + t * t;
  return {std::complex<double>((1 - t * t) / denom, 2 * t / denom)};
}

SphereVerdict check_circle(const TopSymbol& s, const SphereCheckOptions& options) {
  const auto cp = detail::circle_polynomial(s);
  if (cp.q.is_zero() && sign(cp.value_at_pi) == 0) {
    return CertifiedZeroAt{{std::complex<double>(1.0, 0.0)}, std::vector<Scalar>{Scalar(1)}};
  }
  if (sign(cp.value_at_pi) == 0) {
    return CertifiedZeroAt{{std::complex<double>(-1.0, 0.0)}, std::vector<Scalar>{Scalar(-1)}};
  }
  if (count_real_roots(cp.q) > 0) {
    auto roots = isolate_real_roots(cp.q, Rational("1/1000000000000"));
    // Prefer the smallest root with t >= 0 (theta in [0, pi)).
    auto it = std::find_if(roots.begin(), roots.end(), [](const RootInterval& r) { return r.hi >= 0; });
    const RootInterval& root = it != roots.end() ? *it : roots.front();
    if (root.lo == root.hi) {
      const Rational& t = root.hi;
      Rational denom = 1 + t * t;
      Scalar z(Rational((1 - t * t) / denom), Rational(2 * t / denom), 0, 0);
      return CertifiedZeroAt{unit_point(t.get_d()), std::vector<Scalar>{z}};
    }
    double t = Rational((root.lo + root.hi) / 2).get_d();
    return CertifiedZeroAt{unit_point(t), std::nullopt};
  }
  // No zero on the circle: the sign is that of T(0) = Q(0).
  int orientation = sign(cp.q.eval(QSqrt2(0)));
  if (orientation > 0) return CertifiedPositive{certified_bound(s, cp, +1, options.samples)};
  return CertifiedNegative{certified_bound(s, cp, -1, options.samples)};
}

void normalize(std::vector<std::complex<double>>& z) {
  double norm2 = 0;
  for (const auto& zj : z) norm2 += std::norm(zj);
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& zj : z) zj *= scale;
}

SphereVerdict check_sphere_sampled(const TopSymbol& s, const SphereCheckOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::complex<double>> z(s.dim);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  constexpr std::size_t kStarts = 8;
  std::vector<std::pair<double, std::vector<std::complex<double>>>> best;
  for (std::size_t sample = 0; sample < options.samples; ++sample) {
    for (auto& zj : z) zj = {gauss(rng), gauss(rng)};
    normalize(z);
    double v = s.evaluate(z).real();
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    best.emplace_back(v, z);
    if (best.size() > 2 * kStarts) {
      std::nth_element(best.begin(), best.begin() + kStarts, best.end(),
                       [](const auto& x, const auto& y) { return x.first < y.first; });
      best.resize(kStarts);
    }
  }
  // random-perturbation descent from the lowest samples
  for (auto& [value, start] : best) {
    double step = 0.1;
    for (int iter = 0; iter < 800 && step > 1e-12; ++iter) {
      auto trial = start;
      for (auto& zj : trial) zj += step * std::complex<double>(gauss(rng), gauss(rng));
      normalize(trial);
      double v = s.evaluate(trial).real();
      if (v < value) {
        value = v;
        start = std::move(trial);
      } else {
        step *= 0.97;
      }
    }
    lo = std::min(lo, value);
  }
  constexpr double kTolerance = 1e-9;
  if (lo > kTolerance) return HeuristicPositive{lo};
  if (hi < -kTolerance) return Inconclusive{"sampled values are all negative (max " + std::to_string(hi) + ")"};
  return Inconclusive{"sampled values reach zero or change sign (min " + std::to_string(lo) + ")"};
}

}  // namespace

SphereVerdict check_condition_ii(const TopSymbol& s, const SphereCheckOptions& options) {
  if (s.degree % 2 != 0) throw std::invalid_argument("symbol degree must be even");
  if (!s.is_hermitean()) throw std::invalid_argument("symbol is not hermitean");
  if (s.is_zero()) return CertifiedZeroAt{{}, std::nullopt};
  if (s.dim == 1) return check_circle(s, options);
  return check_sphere_sampled(s, options);
}

std::string verdict_name(const SphereVerdict& v) {
  struct Visitor {
    std::string operator()(const CertifiedPositive&) const { return "CertifiedPositive"; }
    std::string operator()(const CertifiedNegative&) const { return "CertifiedNegative"; }
    std::string operator()(const CertifiedZeroAt&) const { return "CertifiedZeroAt"; }
    std::string operator()(const HeuristicPositive&) const { return "HeuristicPositive"; }
    std::string operator()(const Inconclusive&) const { return "Inconclusive"; }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace weylps
