#include "weylps/shift_rational.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylps {

MPoly MPoly::constant(std::size_t dim, const Scalar& value) {
  MPoly p(dim);
  p.add_term(Exponents(dim, 0), value);
  return p;
}

MPoly MPoly::variable(std::size_t dim, std::size_t mode) {
  if (mode < 1 || mode > dim) throw std::invalid_argument("invalid variable index");
  Exponents e(dim, 0);
  e[mode - 1] = 1;
  MPoly p(dim);
  p.add_term(e, Scalar(1));
  return p;
}

MPoly MPoly::total_plus(std::size_t dim, const Rational& c) {
  MPoly p = constant(dim, Scalar(c));
  for (std::size_t j = 1; j <= dim; ++j) p += variable(dim, j);
  return p;
}

int MPoly::degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    best = std::max(best, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  }
  return best;
}

Scalar MPoly::constant_term() const {
  auto it = terms_.find(Exponents(dim_, 0));
  return it == terms_.end() ? Scalar() : it->second;
}

void MPoly::add_term(const Exponents& e, const Scalar& c) {
  if (e.size() != dim_) throw std::invalid_argument("exponent length does not match dimension");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::conj() const {
  MPoly out(dim_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.conj());
  return out;
}

MPoly MPoly::shifted(const std::vector<int>& t) const {
  if (t.size() != dim_) throw std::invalid_argument("shift length does not match dimension");
  if (std::all_of(t.begin(), t.end(), [](int v) { return v == 0; })) return *this;
  MPoly out(dim_);
  for (const auto& [e, c] : terms_) {
    // prod_j (nu_j + t_j)^{e_j}, expanded mode by mode.
    MPoly term = constant(dim_, c);
    for (std::size_t j = 0; j < dim_; ++j) {
      if (e[j] == 0) continue;
      MPoly factor(dim_);
      Integer tp = 1;
      for (unsigned r = 0; r <= e[j]; ++r) {
        // C(e, r) t^r nu^{e-r}
        Exponents ex(dim_, 0);
        ex[j] = e[j] - r;
        factor.add_term(ex, Scalar(Rational(binomial(e[j], r) * tp)));
        tp *= t[j];
      }
      term = term * factor;
    }
    out += term;
  }
  return out;
}

Scalar MPoly::evaluate(const std::vector<Rational>& nu) const {
  if (nu.size() != dim_) throw std::invalid_argument("point length does not match dimension");
  Scalar total;
  for (const auto& [e, c] : terms_) {
    Rational m = 1;
    for (std::size_t j = 0; j < dim_; ++j) {
      for (unsigned r = 0; r < e[j]; ++r) m *= nu[j];
    }
    total += c * Scalar(m);
  }
  return total;
}

MPoly& MPoly::operator+=(const MPoly& y) {
  if (terms_.empty() && dim_ != y.dim_) dim_ = y.dim_;
  if (y.dim_ != dim_ && !y.terms_.empty()) throw std::invalid_argument("dimension mismatch");
  for (const auto& [e, c] : y.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& y) {
  if (terms_.empty() && dim_ != y.dim_) dim_ = y.dim_;
  if (y.dim_ != dim_ && !y.terms_.empty()) throw std::invalid_argument("dimension mismatch");
  for (const auto& [e, c] : y.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MPoly operator*(const MPoly& x, const MPoly& y) {
  if (x.dim_ != y.dim_) throw std::invalid_argument("dimension mismatch");
  MPoly out(x.dim_);
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      MPoly::Exponents e(ex);
      for (std::size_t j = 0; j < e.size(); ++j) e[j] += ey[j];
      out.add_term(e, cx * cy);
    }
  }
  return out;
}

std::pair<MPoly, MPoly> MPoly::divide_linear(const Rational& c) const {
  MPoly quotient(dim_);
  MPoly rest = *this;
  // The divisor is monic of degree one in nu_1; eliminate nu_1 from the top down.
  while (true) {
    const Exponents* top = nullptr;
    for (const auto& [e, coeff] : rest.terms_) {
      if (e[0] > 0 && (top == nullptr || e[0] > (*top)[0])) top = &e;
    }
    if (top == nullptr) break;
    Exponents e = *top;
    Scalar coeff = rest.terms_.at(e);
    --e[0];
    MPoly q(dim_);
    q.add_term(e, coeff);
    quotient += q;
    rest -= q * total_plus(dim_, c);
  }
  return {std::move(quotient), std::move(rest)};
}

ShiftRational::ShiftRational(std::size_t dim, Rational alpha) : num_(dim), alpha_(std::move(alpha)) {}

ShiftRational::ShiftRational(MPoly numerator, Rational alpha, Denominator denominator)
    : num_(std::move(numerator)), alpha_(std::move(alpha)), den_(std::move(denominator)) {
  reduce();
}

ShiftRational ShiftRational::constant(std::size_t dim, const Rational& alpha, const Scalar& value) {
  return ShiftRational(MPoly::constant(dim, value), alpha);
}

ShiftRational ShiftRational::resolvent(std::size_t dim, const Rational& alpha, int n) {
  return ShiftRational(MPoly::constant(dim, Scalar(1)), alpha, Denominator{{n, 1u}});
}

int ShiftRational::weight() const {
  int factors = 0;
  for (const auto& [n, m] : den_) factors += static_cast<int>(m);
  return num_.degree() - factors;
}

void ShiftRational::reduce() {
  for (auto it = den_.begin(); it != den_.end();) {
    if (it->second == 0) {
      it = den_.erase(it);
    } else {
      ++it;
    }
  }
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      auto [q, r] = num_.divide_linear(alpha_ + it->first);
      if (!r.is_zero()) break;
      num_ = std::move(q);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

ShiftRational ShiftRational::conj() const {
  ShiftRational out = *this;
  out.num_ = num_.conj();
  return out;
}

ShiftRational ShiftRational::shifted(const std::vector<int>& t) const {
  ShiftRational out(dim(), alpha_);
  out.num_ = num_.shifted(t);
  const int total = std::accumulate(t.begin(), t.end(), 0);
  for (const auto& [n, m] : den_) out.den_[n + total] = m;
  return out;
}

Scalar ShiftRational::evaluate(const std::vector<Rational>& nu) const {
  Scalar value = num_.evaluate(nu);
  Rational total = std::accumulate(nu.begin(), nu.end(), Rational(0));
  for (const auto& [n, m] : den_) {
    Rational f = total + alpha_ + n;
    if (f == 0) throw std::domain_error("resolvent evaluated at a pole");
    for (unsigned r = 0; r < m; ++r) value = value * Scalar(Rational(1 / f));
  }
  return value;
}

namespace {

void require_compatible(const ShiftRational& x, const ShiftRational& y) {
  if (x.alpha() != y.alpha()) throw std::invalid_argument("alpha mismatch");
  if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch");
}

MPoly factor_power(std::size_t dim, const Rational& c, unsigned m) {
  MPoly out = MPoly::constant(dim, Scalar(1));
  const MPoly l = MPoly::total_plus(dim, c);
  for (unsigned r = 0; r < m; ++r) out = out * l;
  return out;
}

}  // namespace

ShiftRational& ShiftRational::operator+=(const ShiftRational& y) {
  require_compatible(*this, y);
  if (y.is_zero()) return *this;
  if (is_zero()) return *this = y;
  if (den_ == y.den_) {
    num_ += y.num_;
    reduce();
    return *this;
  }
  Denominator common = den_;
  for (const auto& [n, m] : y.den_) common[n] = std::max(common[n], m);
  MPoly lhs = num_, rhs = y.num_;
  for (const auto& [n, m] : common) {
    auto mine = den_.find(n);
    auto theirs = y.den_.find(n);
    unsigned have_x = mine == den_.end() ? 0 : mine->second;
    unsigned have_y = theirs == y.den_.end() ? 0 : theirs->second;
    if (have_x < m) lhs = lhs * factor_power(dim(), alpha_ + n, m - have_x);
    if (have_y < m) rhs = rhs * factor_power(dim(), alpha_ + n, m - have_y);
  }
  num_ = lhs + rhs;
  den_ = std::move(common);
  reduce();
  return *this;
}

ShiftRational& ShiftRational::operator-=(const ShiftRational& y) {
  ShiftRational negated = y;
  negated *= Scalar(-1);
  return *this += negated;
}

ShiftRational& ShiftRational::operator*=(const Scalar& s) {
  num_ *= s;
  if (num_.is_zero()) den_.clear();
  return *this;
}

ShiftRational operator*(const ShiftRational& x, const ShiftRational& y) {
  require_compatible(x, y);
  ShiftRational out(x.dim(), x.alpha_);
  out.num_ = x.num_ * y.num_;
  if (out.num_.is_zero()) return out;
  out.den_ = x.den_;
  for (const auto& [n, m] : y.den_) out.den_[n] += m;
  out.reduce();
  return out;
}

std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest total degree first.
  std::vector<std::pair<MPoly::Exponents, Scalar>> ordered(p.terms().begin(), p.terms().end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    unsigned dx = std::accumulate(x.first.begin(), x.first.end(), 0u);
    unsigned dy = std::accumulate(y.first.begin(), y.first.end(), 0u);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  for (const auto& [e, c] : ordered) {
    std::string factors;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += p.dim() == 1 ? std::string("N") : "N(" + std::to_string(j + 1) + ")";
      if (e[j] > 1) factors += "^" + std::to_string(e[j]);
    }
    std::string coeff = to_string(c, true);
    bool negative = coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
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

std::string to_string(const ShiftRational& f) {
  std::string num = to_string(f.numerator());
  if (f.denominator().empty()) return num;
  std::string out = f.numerator().terms().size() > 1 ? "(" + num + ")" : num;
  if (out == "1") out.clear();
  if (out == "-1") out = "-";
  for (const auto& [n, m] : f.denominator()) {
    if (!out.empty() && out != "-") out += "*";
    out += "y(" + std::to_string(n) + ")";
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

}  // namespace weylps
