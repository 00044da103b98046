#include "weylps/relations.hpp"

#include <array>
#include <stdexcept>

namespace weylps {

int t_weight(int i, int j) {
  if (i > 0 && j > 0) return 2;
  if ((i == 0 && j > 0) || (i > 0 && j == 0)) return 1;
  return 0;
}

namespace {

constexpr std::array<std::pair<RelationId, const char*>, 17> kNames{{
    {RelationId::r1, "r1"},
    {RelationId::r2, "r2"},
    {RelationId::r3, "r3"},
    {RelationId::r4, "r4"},
    {RelationId::r5, "r5"},
    {RelationId::r6, "r6"},
    {RelationId::r6_unsquared, "r6_unsquared"},
    {RelationId::r7, "r7"},
    {RelationId::r8, "r8"},
    {RelationId::r9, "r9"},
    {RelationId::r10, "r10"},
    {RelationId::r11, "r11"},
    {RelationId::xklstar, "xklstar"},
    {RelationId::lemma41i, "lemma41i"},
    {RelationId::lemma41ii, "lemma41ii"},
    {RelationId::ynullpos, "ynullpos"},
    {RelationId::xkery_consequence, "xkery_consequence"},
}};

int sgn(int v) { return (v > 0) - (v < 0); }

// Shorthand for building elements of one fixed localized algebra.
struct Algebra {
  std::size_t d;
  Rational alpha;

  LocalizedElement one() const { return LocalizedElement::one(d, alpha); }
  LocalizedElement c(const Rational& v) const { return LocalizedElement::constant(d, alpha, Scalar(v)); }
  LocalizedElement a(int k) const { return make_generator(d, alpha, k); }
  LocalizedElement y(int n) const { return make_y(d, alpha, n); }
  LocalizedElement x(int k, int l) const { return make_x(d, alpha, k, l); }
  LocalizedElement xk(int k) const { return make_x(d, alpha, k, 0); }
  LocalizedElement xks(int k) const { return l_adjoint(xk(k)); }
  // y_{j0}, with y_{00} = x_{00} = y_0.
  LocalizedElement yj0(int j) const { return j == 0 ? y(0) : make_yk0(d, alpha, j); }

  void require_index(int v, int lo, int hi, const char* what) const {
    if (v < lo || v > hi) {
      throw std::invalid_argument(std::string("index ") + what + " = " + std::to_string(v) + " out of range");
    }
  }
  int di() const { return static_cast<int>(d); }
};

LocalizedElement operator*(const Rational& s, const LocalizedElement& x) { return Scalar(s) * x; }

std::string label_of(RelationId id, std::initializer_list<std::pair<const char*, std::string>> fields) {
  std::string out = relation_name(id) + "(";
  bool first = true;
  for (const auto& [name, value] : fields) {
    if (!first) out += ",";
    first = false;
    out += std::string(name) + "=" + value;
  }
  return out + ")";
}

std::string multi_to_string(const std::vector<unsigned>& m) {
  std::string out = "(";
  for (std::size_t j = 0; j < m.size(); ++j) out += (j ? "," : "") + std::to_string(m[j]);
  return out + ")";
}

// Records the first nonzero difference among the parts of a relation.
struct Collector {
  RelationResult result;
  void check(const LocalizedElement& lhs, const LocalizedElement& rhs) {
    if (result.difference) return;
    LocalizedElement diff = lhs - rhs;
    if (!diff.is_zero()) result.difference = std::move(diff);
  }
  RelationResult finish() {
    result.holds = !result.difference.has_value();
    return std::move(result);
  }
};

LocalizedElement x_multi(const Algebra& A, const std::vector<unsigned>& multi) {
  LocalizedElement out = A.one();
  for (std::size_t j = 0; j < multi.size(); ++j) out = out * l_power(A.xk(static_cast<int>(j) + 1), multi[j]);
  return out;
}

}  // namespace

std::string relation_name(RelationId id) {
  for (const auto& [key, name] : kNames) {
    if (key == id) return name;
  }
  throw std::logic_error("unknown relation id");
}

RelationId parse_relation_name(const std::string& name) {
  for (const auto& [key, text] : kNames) {
    if (name == text) return key;
  }
  throw std::invalid_argument("unknown relation '" + name + "'");
}

RelationResult verify_relation(RelationId id, std::size_t dim, const Rational& alpha, const RelationParams& p) {
  const Algebra A{dim, alpha};
  const int d = A.di();
  const auto s = [](int v) { return std::to_string(v); };
  Collector out;
  out.result.id = id;
  switch (id) {
    case RelationId::r1: {
      out.result.label = label_of(id, {{"k", s(p.n)}, {"n", s(p.m)}});
      const Rational gap(p.m - p.n);
      out.check(A.y(p.n) - A.y(p.m), gap * (A.y(p.n) * A.y(p.m)));
      out.check(A.y(p.n) - A.y(p.m), gap * (A.y(p.m) * A.y(p.n)));
      break;
    }
    case RelationId::r2: {
      out.result.label = label_of(id, {});
      LocalizedElement sum(dim, alpha);
      for (int k = 1; k <= d; ++k) sum += A.yj0(k);
      out.check(sum, A.one() - alpha * A.y(0));
      break;
    }
    case RelationId::r3: {
      A.require_index(p.k, 1, d, "k");
      A.require_index(p.l, -d, d, "l");
      out.result.label = label_of(id, {{"k", s(p.k)}, {"l", s(p.l)}});
      const Rational delta(p.k == std::abs(p.l) ? 1 : 0);
      if (p.l >= 0) {
        const auto x = A.x(p.k, p.l);
        out.check(l_adjoint(x) * x, A.yj0(p.k) * (A.yj0(p.l) - delta * A.y(0)));
      } else {
        const int l = -p.l;
        const auto x = A.x(p.k, -l);
        out.check(l_adjoint(x) * x, (A.yj0(p.k) + delta * A.y(0)) * (A.yj0(l) + A.y(0)));
      }
      break;
    }
    case RelationId::r4: {
      A.require_index(p.k, -d, d, "k");
      A.require_index(p.l, -d, d, "l");
      out.result.label = label_of(id, {{"k", s(p.k)}, {"l", s(p.l)}});
      const auto x = A.x(p.k, p.l);
      out.check(A.y(0) * x, (A.one() + Rational(sgn(p.k) + sgn(p.l)) * A.y(0)) * x * A.y(0));
      break;
    }
    case RelationId::r5: {
      A.require_index(p.k, 1, d, "k");
      out.result.label = label_of(id, {{"k", s(p.k)}, {"n", s(p.n)}});
      out.check(A.y(p.n) * A.xks(p.k), A.xks(p.k) * A.y(p.n + 1));
      out.check(A.xk(p.k) * A.y(p.n), A.y(p.n + 1) * A.xk(p.k));
      break;
    }
    case RelationId::r6:
    case RelationId::r6_unsquared: {
      A.require_index(p.k, 1, d, "k");
      A.require_index(p.l, 1, d, "l");
      out.result.label = label_of(id, {{"k", s(p.k)}, {"l", s(p.l)}});
      const Rational delta(p.k == p.l ? 1 : 0);
      auto middle = A.one() - A.y(2);
      if (id == RelationId::r6) middle = middle * middle;
      out.check(A.xk(p.l) * A.xks(p.k), A.xks(p.k) * middle * A.xk(p.l) + delta * (A.y(1) * A.y(1)));
      break;
    }
    case RelationId::r7: {
      A.require_index(p.k, 1, d, "k");
      out.result.label = label_of(id, {{"k", s(p.k)}});
      const auto yk0 = A.yj0(p.k);
      out.check(A.xk(p.k) * A.xks(p.k), yk0 * A.y(1) * (A.one() - A.y(1)) + A.y(1) * A.y(1));
      out.check(yk0 * A.xks(p.k), A.xks(p.k) * (yk0 * (A.one() - A.y(1)) + A.y(1)));
      break;
    }
    case RelationId::r8: {
      A.require_index(p.k, 1, d, "k");
      A.require_index(p.l, 1, d, "l");
      out.result.label = label_of(id, {{"k", s(p.k)}, {"l", s(p.l)}});
      out.check(A.x(p.k, p.l) * A.y(0), A.xk(p.k) * A.xk(p.l) * (A.one() - A.y(0)));
      out.check(A.x(-p.k, -p.l) * A.y(0), A.xks(p.k) * A.xks(p.l) * (A.one() + A.y(0)));
      break;
    }
    case RelationId::r9: {
      A.require_index(p.k, 1, d, "k");
      A.require_index(p.l, 1, d, "l");
      out.result.label = label_of(id, {{"k", s(p.k)}, {"l", s(p.l)}});
      const Rational delta(p.k == p.l ? 1 : 0);
      const auto lhs = A.x(p.k, -p.l) * A.y(0);
      out.check(lhs, A.x(-p.l, p.k) * A.y(0) + delta * (A.y(0) * A.y(0)));
      out.check(lhs, A.xks(p.l) * A.xk(p.k) + delta * (A.y(0) * A.y(0)));
      break;
    }
    case RelationId::r10: {
      for (int v : {p.i, p.j, p.k, p.l}) A.require_index(v, -d, d, "i/j/k/l");
      out.result.label = label_of(id, {{"i", s(p.i)}, {"j", s(p.j)}, {"k", s(p.k)}, {"l", s(p.l)}});
      // Membership in y_0 X is checked through its necessary weight condition:
      // y_0 X has boundedness weight <= -1, while X itself only reaches 0.
      const auto xij = A.x(p.i, p.j), xkl = A.x(p.k, p.l);
      for (const auto& diff : {xij * xkl - xkl * xij, xij * xkl - A.x(p.i, p.l) * A.x(p.k, p.j)}) {
        if (!diff.is_zero() && diff.boundedness_weight() > -1 && !out.result.difference) out.result.difference = diff;
      }
      break;
    }
    case RelationId::r11: {
      A.require_index(p.k, -d, d, "k");
      A.require_index(p.l, -d, d, "l");
      out.result.label = label_of(id, {{"k", s(p.k)}, {"l", s(p.l)}});
      out.check(A.y(0) * A.a(p.k) * A.a(p.l), (A.one() + Rational(t_weight(p.k, p.l)) * A.y(0)) * A.x(p.k, p.l));
      break;
    }
    case RelationId::xklstar: {
      A.require_index(p.k, -d, d, "k");
      A.require_index(p.l, -d, d, "l");
      out.result.label = label_of(id, {{"k", s(p.k)}, {"l", s(p.l)}});
      out.check(l_adjoint(A.x(p.k, p.l)), A.x(-p.l, -p.k));
      if (p.k + p.l != 0) out.check(A.x(p.k, p.l), A.x(p.l, p.k));
      if (p.k > 0 && p.l == -p.k) out.check(A.x(p.k, -p.k) - A.x(-p.k, p.k), A.y(0));
      break;
    }
    case RelationId::lemma41i: {
      A.require_index(p.k, 1, d, "k");
      if (p.multi.size() != dim) throw std::invalid_argument("lemma41i needs a multi-index of length d");
      if (p.multi[p.k - 1] != 0) throw std::invalid_argument("lemma41i requires n_k = 0");
      unsigned total = 0;
      for (unsigned v : p.multi) total += v;
      if (total == 0) throw std::invalid_argument("lemma41i requires a nonzero multi-index");
      out.result.label = label_of(id, {{"k", s(p.k)}, {"n", multi_to_string(p.multi)}});
      const auto xn_star = l_adjoint(x_multi(A, p.multi));
      LocalizedElement prod = A.one();
      for (unsigned j = 2; j <= total + 1; ++j) prod = prod * (A.one() - A.y(static_cast<int>(j)));
      out.check(A.xk(p.k) * xn_star, xn_star * prod * prod * A.xk(p.k));
      break;
    }
    case RelationId::lemma41ii: {
      A.require_index(p.k, 1, d, "k");
      out.result.label = label_of(id, {{"k", s(p.k)}, {"r", std::to_string(p.r)}});
      const auto xr = l_power(A.xks(p.k), p.r);
      const int r1 = static_cast<int>(p.r) + 1;
      const auto yr1 = A.y(r1);
      out.check(A.xk(p.k) * A.xks(p.k) * xr,
                xr * (A.yj0(p.k) * (A.one() - Rational(r1) * yr1) + Rational(r1) * yr1) * yr1);
      break;
    }
    case RelationId::ynullpos: {
      out.result.label = label_of(id, {});
      LocalizedElement squares(dim, alpha);
      for (int k = 1; k <= d; ++k) squares += A.xks(k) * A.xk(k);
      const auto y0 = A.y(0);
      out.check(alpha * (y0 * y0) + squares, y0);
      const Rational inv = 1 / alpha;
      const auto shifted = y0 - A.c(inv);
      out.check(A.c(inv) - y0, alpha * (shifted * shifted) + squares);
      break;
    }
    case RelationId::xkery_consequence: {
      A.require_index(p.k, 1, d, "k");
      out.result.label = label_of(id, {{"k", s(p.k)}});
      out.check((A.one() + A.y(0)) * A.xk(p.k) * A.y(0), A.y(0) * A.xk(p.k));
      break;
    }
  }
  return out.finish();
}

std::vector<RelationResult> relation_suite(std::size_t dim, const Rational& alpha, int max_n, bool include_unsquared_r6) {
  validate_alpha(alpha);
  const int d = static_cast<int>(dim);
  std::vector<RelationResult> results;
  auto run = [&](RelationId id, const RelationParams& p) { results.push_back(verify_relation(id, dim, alpha, p)); };

  for (int n = -max_n; n <= max_n; ++n) {
    for (int m = -max_n; m <= max_n; ++m) run(RelationId::r1, {.n = n, .m = m});
  }
  run(RelationId::r2, {});
  for (int k = 1; k <= d; ++k) {
    for (int l = -d; l <= d; ++l) run(RelationId::r3, {.k = k, .l = l});
  }
  for (int k = -d; k <= d; ++k) {
    for (int l = -d; l <= d; ++l) {
      run(RelationId::r4, {.k = k, .l = l});
      run(RelationId::r11, {.k = k, .l = l});
      run(RelationId::xklstar, {.k = k, .l = l});
    }
  }
  for (int k = 1; k <= d; ++k) {
    for (int n = -max_n; n <= max_n; ++n) run(RelationId::r5, {.k = k, .n = n});
    for (int l = 1; l <= d; ++l) {
      run(RelationId::r6, {.k = k, .l = l});
      if (include_unsquared_r6) run(RelationId::r6_unsquared, {.k = k, .l = l});
      run(RelationId::r8, {.k = k, .l = l});
      run(RelationId::r9, {.k = k, .l = l});
    }
    run(RelationId::r7, {.k = k});
    run(RelationId::xkery_consequence, {.k = k});
  }
  for (int i = -d; i <= d; ++i) {
    for (int j = -d; j <= d; ++j) {
      for (int k = -d; k <= d; ++k) {
        for (int l = -d; l <= d; ++l) run(RelationId::r10, {.i = i, .j = j, .k = k, .l = l});
      }
    }
  }
  run(RelationId::ynullpos, {});
  for (int k = 1; k <= d; ++k) {
    for (int r = 0; r <= max_n; ++r) run(RelationId::lemma41ii, {.k = k, .r = static_cast<unsigned>(r)});
    // Multi-indices with n_k = 0 and 0 < |n| <= max_n.
    std::vector<unsigned> multi(dim, 0);
    while (true) {
      std::size_t pos = 0;
      while (pos < dim) {
        if (static_cast<int>(pos) == k - 1) {
          ++pos;
          continue;
        }
        if (++multi[pos] <= static_cast<unsigned>(max_n)) break;
        multi[pos] = 0;
        ++pos;
      }
      if (pos == dim) break;
      unsigned total = 0;
      for (unsigned v : multi) total += v;
      if (total == 0 || total > static_cast<unsigned>(max_n)) continue;
      run(RelationId::lemma41i, {.k = k, .multi = multi});
    }
  }
  return results;
}

std::vector<Rational> Lemma32Factorization::constant_terms() const {
  std::vector<Rational> out;
  for (const auto& fj : f) out.push_back(fj.coefficient(0));
  return out;
}

LocalizedElement y0_polynomial(std::size_t dim, const Rational& alpha, const UPoly<Rational>& p) {
  LocalizedElement out(dim, alpha);
  LocalizedElement power = LocalizedElement::one(dim, alpha);
  const auto y0 = make_y(dim, alpha, 0);
  for (const auto& c : p.coefficients()) {
    out += Scalar(c) * power;
    power = l_mul(power, y0);
  }
  return out;
}

LocalizedElement Lemma32Factorization::product(std::size_t dim, const Rational& alpha) const {
  LocalizedElement out = LocalizedElement::one(dim, alpha);
  for (std::size_t j = 0; j < f.size(); ++j) {
    out = l_mul(out, y0_polynomial(dim, alpha, f[j]));
    out = l_mul(out, make_x(dim, alpha, indices[2 * j], indices[2 * j + 1]));
  }
  return out;
}

Lemma32Factorization lemma32_factorize(std::size_t dim, const Rational& alpha, const std::vector<int>& indices) {
  if (indices.empty() || indices.size() % 2 != 0) throw std::invalid_argument("index list must have even positive length");
  const int d = static_cast<int>(dim);
  for (int v : indices) {
    if (v < -d || v > d) throw std::invalid_argument("generator index out of range");
  }
  Lemma32Factorization out;
  out.indices = indices;
  const std::size_t n = indices.size() / 2;
  // Induction on n: pushing y_0 rightwards through x_{kl} multiplies the factor
  // in front of it by (1 + (sign k + sign l) y_0); the new pair enters with
  // (1 + t(k, l) y_0).
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const int sigma = sgn(indices[2 * i]) + sgn(indices[2 * i + 1]);
      out.f[i] = out.f[i] * UPoly<Rational>(std::vector<Rational>{Rational(1), Rational(sigma)});
    }
    const int t = t_weight(indices[2 * j], indices[2 * j + 1]);
    out.f.push_back(UPoly<Rational>(std::vector<Rational>{Rational(1), Rational(t)}));
  }
  LocalizedElement direct = l_power(make_y(dim, alpha, 0), static_cast<unsigned>(n));
  for (int v : indices) direct = l_mul(direct, make_generator(dim, alpha, v));
  out.verified = direct == out.product(dim, alpha);
  return out;
}

Sandwich y0_sandwich(const WeylElement& c, const Rational& alpha, unsigned n) {
  const auto yn = l_power(make_y(c.dim(), alpha, 0), n);
  Sandwich out{l_mul(l_mul(yn, embed(c, alpha)), yn), true};
  const auto deg = degree(c);
  out.degree_ok = !deg || *deg <= 4 * n;
  return out;
}

LocalizedElement y0_sandwich_factorized(const WeylElement& c, const Rational& alpha, unsigned n) {
  const std::size_t dim = c.dim();
  const auto deg = degree(c);
  if (deg && *deg > 4 * n) throw std::invalid_argument("degree exceeds 4n");
  LocalizedElement out(dim, alpha);
  for (const auto& [e, coeff] : c.terms()) {
    std::vector<int> word;
    for (std::size_t j = 0; j < dim; ++j) word.insert(word.end(), e.k[j], static_cast<int>(j) + 1);
    for (std::size_t j = 0; j < dim; ++j) word.insert(word.end(), e.l[j], -static_cast<int>(j) - 1);
    word.resize(4 * n, 0);
    std::vector<int> left(word.begin(), word.begin() + 2 * n);
    // a_{i_{2n+1}}..a_{i_{4n}} y_0^n is the adjoint of y_0^n a_{-i_{4n}}..a_{-i_{2n+1}}.
    std::vector<int> right;
    for (auto it = word.rbegin(); it != word.rbegin() + 2 * static_cast<long>(n); ++it) right.push_back(-*it);
    const auto lhs = lemma32_factorize(dim, alpha, left).product(dim, alpha);
    const auto rhs = l_adjoint(lemma32_factorize(dim, alpha, right).product(dim, alpha));
    out += coeff * l_mul(lhs, rhs);
  }
  return out;
}

}  // namespace weylps
