#include "weylps/localized.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace weylps {

void validate_alpha(const Rational& alpha) {
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  if (alpha.get_den() == 1) throw std::invalid_argument("alpha must not be an integer");
}

namespace {

void require_compatible(const LocalizedElement& x, const LocalizedElement& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch");
  if (x.alpha() != y.alpha()) throw std::invalid_argument("alpha mismatch");
}

// prod_{i=1..j} (nu_mode + c + i).
MPoly rising_product(std::size_t dim, std::size_t mode, int c, int j) {
  MPoly out = MPoly::constant(dim, Scalar(1));
  for (int i = 1; i <= j; ++i) out = out * (MPoly::variable(dim, mode + 1) + MPoly::constant(dim, Scalar(c + i)));
  return out;
}

// (nu_mode + c)(nu_mode + c - 1)...(nu_mode + c - j + 1).
MPoly falling_product(std::size_t dim, std::size_t mode, int c, int j) {
  MPoly out = MPoly::constant(dim, Scalar(1));
  for (int i = 0; i < j; ++i) out = out * (MPoly::variable(dim, mode + 1) + MPoly::constant(dim, Scalar(c - i)));
  return out;
}

// E_s E_t = E_{s+t} h(nu); returns h.
MPoly shift_product(const LocalizedElement::Shift& s, const LocalizedElement::Shift& t) {
  const std::size_t dim = s.size();
  MPoly h = MPoly::constant(dim, Scalar(1));
  for (std::size_t j = 0; j < dim; ++j) {
    const int p = s[j], q = t[j];
    if ((p >= 0 && q >= 0) || (p <= 0 && q <= 0)) continue;
    if (p > 0) {
      // a^p a_-^m
      const int m = -q;
      h = h * (p >= m ? rising_product(dim, j, 0, m) : rising_product(dim, j, m - p, p));
    } else {
      // a_-^m a^q
      const int m = -p;
      h = h * (m >= q ? falling_product(dim, j, 0, q) : falling_product(dim, j, -(q - m), m));
    }
  }
  return h;
}

LocalizedElement::Shift negated(const LocalizedElement::Shift& s) {
  LocalizedElement::Shift out(s);
  for (int& v : out) v = -v;
  return out;
}

}  // namespace

LocalizedElement::LocalizedElement(std::size_t dim, Rational alpha) : dim_(dim), alpha_(std::move(alpha)) {
  if (dim == 0) throw std::invalid_argument("dimension must be at least 1");
  validate_alpha(alpha_);
}

LocalizedElement LocalizedElement::constant(std::size_t dim, const Rational& alpha, const Scalar& value) {
  LocalizedElement out(dim, alpha);
  out.add_term(Shift(dim, 0), ShiftRational::constant(dim, alpha, value));
  return out;
}

LocalizedElement LocalizedElement::term(const Shift& shift, const ShiftRational& coefficient) {
  LocalizedElement out(coefficient.dim(), coefficient.alpha());
  out.add_term(shift, coefficient);
  return out;
}

ShiftRational LocalizedElement::coefficient(const Shift& shift) const {
  auto it = terms_.find(shift);
  return it == terms_.end() ? ShiftRational(dim_, alpha_) : it->second;
}

void LocalizedElement::add_term(const Shift& shift, const ShiftRational& coefficient) {
  if (shift.size() != dim_ || coefficient.dim() != dim_) throw std::invalid_argument("dimension mismatch");
  if (coefficient.alpha() != alpha_) throw std::invalid_argument("alpha mismatch");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(shift, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational LocalizedElement::boundedness_weight() const {
  Rational best(-1000000);
  for (const auto& [s, f] : terms_) {
    int total = 0;
    for (int v : s) total += std::abs(v);
    Rational w = Rational(total) / 2 + f.weight();
    if (w > best) best = w;
  }
  return best;
}

LocalizedElement& LocalizedElement::operator+=(const LocalizedElement& y) {
  require_compatible(*this, y);
  for (const auto& [s, f] : y.terms_) add_term(s, f);
  return *this;
}

LocalizedElement& LocalizedElement::operator-=(const LocalizedElement& y) {
  require_compatible(*this, y);
  for (const auto& [s, f] : y.terms_) {
    ShiftRational g = f;
    g *= Scalar(-1);
    add_term(s, g);
  }
  return *this;
}

LocalizedElement& LocalizedElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [shift, f] : terms_) f *= s;
  return *this;
}

LocalizedElement operator*(const LocalizedElement& x, const LocalizedElement& y) { return l_mul(x, y); }

LocalizedElement l_mul(const LocalizedElement& x, const LocalizedElement& y) {
  require_compatible(x, y);
  LocalizedElement out(x.dim(), x.alpha());
  for (const auto& [s, f] : x.terms()) {
    for (const auto& [t, g] : y.terms()) {
      // E_s f E_t g = E_{s+t} h_{s,t}(nu) f(nu - t) g(nu)
      LocalizedElement::Shift st(s);
      for (std::size_t j = 0; j < st.size(); ++j) st[j] += t[j];
      ShiftRational h(shift_product(s, t), x.alpha());
      out.add_term(st, h * f.shifted(negated(t)) * g);
    }
  }
  return out;
}

LocalizedElement l_adjoint(const LocalizedElement& x) {
  LocalizedElement out(x.dim(), x.alpha());
  // (E_s f)^* = f-bar(nu) E_{-s} = E_{-s} f-bar(nu + s)
  for (const auto& [s, f] : x.terms()) out.add_term(negated(s), f.conj().shifted(s));
  return out;
}

LocalizedElement l_power(const LocalizedElement& x, unsigned exponent) {
  LocalizedElement out = LocalizedElement::one(x.dim(), x.alpha());
  for (unsigned j = 0; j < exponent; ++j) out = l_mul(out, x);
  return out;
}

LocalizedElement embed(const WeylElement& c, const Rational& alpha) {
  const std::size_t dim = c.dim();
  LocalizedElement out(dim, alpha);
  for (const auto& [e, coeff] : c.terms()) {
    LocalizedElement::Shift s(dim), t(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      s[j] = static_cast<int>(e.k[j]);
      t[j] = -static_cast<int>(e.l[j]);
    }
    LocalizedElement::Shift st(dim);
    for (std::size_t j = 0; j < dim; ++j) st[j] = s[j] + t[j];
    MPoly h = shift_product(s, t);
    h *= coeff;
    out.add_term(st, ShiftRational(std::move(h), alpha));
  }
  return out;
}

LocalizedElement make_generator(std::size_t dim, const Rational& alpha, int index) {
  if (index == 0) return LocalizedElement::one(dim, alpha);
  const int mode = std::abs(index);
  if (static_cast<std::size_t>(mode) > dim) {
    throw std::invalid_argument("generator index " + std::to_string(index) + " out of range for d = " + std::to_string(dim));
  }
  LocalizedElement::Shift s(dim, 0);
  s[mode - 1] = index > 0 ? 1 : -1;
  return LocalizedElement::term(s, ShiftRational::constant(dim, alpha, Scalar(1)));
}

LocalizedElement make_number(std::size_t dim, const Rational& alpha, int mode) {
  if (mode < 0 || static_cast<std::size_t>(mode) > dim) throw std::invalid_argument("invalid mode");
  MPoly p(dim);
  if (mode == 0) {
    p = MPoly::total_plus(dim, 0);
  } else {
    p = MPoly::variable(dim, static_cast<std::size_t>(mode));
  }
  return LocalizedElement::term(LocalizedElement::Shift(dim, 0), ShiftRational(std::move(p), alpha));
}

LocalizedElement make_y(std::size_t dim, const Rational& alpha, int n) {
  validate_alpha(alpha);
  return LocalizedElement::term(LocalizedElement::Shift(dim, 0), ShiftRational::resolvent(dim, alpha, n));
}

LocalizedElement make_x(std::size_t dim, const Rational& alpha, int k, int l) {
  const auto pair = l_mul(make_generator(dim, alpha, k), make_generator(dim, alpha, l));
  const auto y0 = make_y(dim, alpha, 0);
  return (k <= 0 && l <= 0) ? l_mul(y0, pair) : l_mul(pair, y0);
}

LocalizedElement make_yk0(std::size_t dim, const Rational& alpha, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > dim) throw std::invalid_argument("y_{k0} requires k in 1..d");
  return make_x(dim, alpha, -k, k);
}

std::string to_string(const LocalizedElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, f] : x.terms()) {
    std::string gens;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] == 0) continue;
      if (!gens.empty()) gens += "*";
      gens += (s[j] > 0 ? "a(" : "ad(") + std::to_string(j + 1) + ")";
      if (std::abs(s[j]) > 1) gens += "^" + std::to_string(std::abs(s[j]));
    }
    std::string coeff = to_string(f);
    bool negative = false;
    if (f.numerator().terms().size() == 1 && coeff.front() == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (gens.empty()) {
      out << coeff;
    } else if (coeff == "1") {
      out << gens;
    } else if (f.numerator().terms().size() > 1 && f.denominator().empty()) {
      out << gens << "*(" << coeff << ")";
    } else {
      out << gens << "*" << coeff;
    }
  }
  return out.str();
}

}  // namespace weylps
