#include "weylps/fock.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace weylps {

namespace {

Integer multi_factorial(const Occupation& n) {
  Integer out = 1;
  for (unsigned v : n) out *= factorial(v);
  return out;
}

unsigned total(const Occupation& n) { return std::accumulate(n.begin(), n.end(), 0u); }

// Applies the shift E_s to f_n: a^p f_n = n^{(p)} f_{n-p}, a_-^m f_n = f_{n+m}.
// Returns false when the result vanishes.
bool shift_exact(const std::vector<int>& s, Occupation& n, Integer& factor) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] > 0) {
      const unsigned p = static_cast<unsigned>(s[j]);
      if (p > n[j]) return false;
      for (unsigned i = 0; i < p; ++i) factor *= n[j] - i;
      n[j] -= p;
    } else {
      n[j] += static_cast<unsigned>(-s[j]);
    }
  }
  return true;
}

// Same on e_n: a^p e_n = sqrt(n!/(n-p)!) e_{n-p}, a_-^m e_n = sqrt((n+m)!/n!) e_{n+m}.
bool shift_numeric(const std::vector<int>& s, Occupation& n, double& factor) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] > 0) {
      const unsigned p = static_cast<unsigned>(s[j]);
      if (p > n[j]) return false;
      for (unsigned i = 0; i < p; ++i) factor *= std::sqrt(static_cast<double>(n[j] - i));
      n[j] -= p;
    } else {
      const unsigned m = static_cast<unsigned>(-s[j]);
      for (unsigned i = 1; i <= m; ++i) factor *= std::sqrt(static_cast<double>(n[j] + i));
      n[j] += m;
    }
  }
  return true;
}

std::vector<Rational> as_point(const Occupation& n) { return std::vector<Rational>(n.begin(), n.end()); }

// a^k a_-^l as a shift pair (first a_-^l, then a^k).
std::vector<int> creators(const MultiIndexPair& e) {
  std::vector<int> s(e.l.size());
  for (std::size_t j = 0; j < s.size(); ++j) s[j] = -static_cast<int>(e.l[j]);
  return s;
}
std::vector<int> annihilators(const MultiIndexPair& e) { return std::vector<int>(e.k.begin(), e.k.end()); }

void require_dim(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

FockVector FockVector::basis(const Occupation& n) {
  FockVector v;
  v.dim = n.size();
  v.amplitudes[n] = 1.0;
  return v;
}

void FockVector::add(const Occupation& n, std::complex<double> value) {
  if (value == 0.0) return;
  auto [it, inserted] = amplitudes.try_emplace(n, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0.0) amplitudes.erase(it);
  }
}

ExactFockVector ExactFockVector::vacuum(std::size_t dim) { return basis(Occupation(dim, 0)); }

ExactFockVector ExactFockVector::basis(const Occupation& n) {
  ExactFockVector v;
  v.dim = n.size();
  v.amplitudes[n] = Scalar(1);
  return v;
}

void ExactFockVector::add(const Occupation& n, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = amplitudes.try_emplace(n, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) amplitudes.erase(it);
  }
}

Scalar inner(const ExactFockVector& u, const ExactFockVector& v) {
  require_dim(u.dim, v.dim);
  Scalar out;
  for (const auto& [n, c] : u.amplitudes) {
    auto it = v.amplitudes.find(n);
    if (it == v.amplitudes.end()) continue;
    out += c.conj() * it->second * Scalar(Rational(multi_factorial(n)));
  }
  return out;
}

std::complex<double> inner(const FockVector& u, const FockVector& v) {
  require_dim(u.dim, v.dim);
  std::complex<double> out = 0.0;
  for (const auto& [n, c] : u.amplitudes) {
    auto it = v.amplitudes.find(n);
    if (it != v.amplitudes.end()) out += std::conj(c) * it->second;
  }
  return out;
}

ExactFockVector apply(const WeylElement& x, const ExactFockVector& v) {
  require_dim(x.dim(), v.dim);
  ExactFockVector out;
  out.dim = v.dim;
  for (const auto& [e, c] : x.terms()) {
    for (const auto& [n, amp] : v.amplitudes) {
      Occupation m = n;
      Integer factor = 1;
      if (!shift_exact(creators(e), m, factor) || !shift_exact(annihilators(e), m, factor)) continue;
      out.add(m, c * amp * Scalar(Rational(factor)));
    }
  }
  return out;
}

ExactFockVector apply(const LocalizedElement& x, const ExactFockVector& v) {
  require_dim(x.dim(), v.dim);
  ExactFockVector out;
  out.dim = v.dim;
  for (const auto& [s, f] : x.terms()) {
    for (const auto& [n, amp] : v.amplitudes) {
      const Scalar value = f.evaluate(as_point(n));
      Occupation m = n;
      Integer factor = 1;
      if (!shift_exact(s, m, factor)) continue;
      out.add(m, value * amp * Scalar(Rational(factor)));
    }
  }
  return out;
}

FockVector apply(const WeylElement& x, const FockVector& v) {
  require_dim(x.dim(), v.dim);
  FockVector out;
  out.dim = v.dim;
  for (const auto& [e, c] : x.terms()) {
    const auto cc = c.to_complex();
    for (const auto& [n, amp] : v.amplitudes) {
      Occupation m = n;
      double factor = 1;
      if (!shift_numeric(creators(e), m, factor) || !shift_numeric(annihilators(e), m, factor)) continue;
      out.add(m, cc * amp * factor);
    }
  }
  return out;
}

FockVector apply(const LocalizedElement& x, const FockVector& v) {
  require_dim(x.dim(), v.dim);
  FockVector out;
  out.dim = v.dim;
  for (const auto& [s, f] : x.terms()) {
    for (const auto& [n, amp] : v.amplitudes) {
      const auto value = f.evaluate(as_point(n)).to_complex();
      Occupation m = n;
      double factor = 1;
      if (!shift_numeric(s, m, factor)) continue;
      out.add(m, value * amp * factor);
    }
  }
  return out;
}

namespace {

// Compositions of `remaining` into positions pos.., first entry largest first.
void compositions(Occupation& n, std::size_t pos, unsigned remaining, std::vector<Occupation>& out) {
  if (pos + 1 == n.size()) {
    n[pos] = remaining;
    out.push_back(n);
    return;
  }
  for (unsigned v = remaining + 1; v-- > 0;) {
    n[pos] = v;
    compositions(n, pos + 1, remaining - v, out);
  }
}

}  // namespace

std::vector<Occupation> basis_states(std::size_t dim, unsigned level) {
  if (dim == 0) throw std::invalid_argument("dimension must be at least 1");
  std::vector<Occupation> out;
  Occupation n(dim, 0);
  for (unsigned t = 0; t <= level; ++t) compositions(n, 0, t, out);
  return out;
}

bool CompressedMatrix::is_hermitean(double tolerance) const {
  for (std::size_t r = 0; r < size(); ++r) {
    for (std::size_t c = 0; c < size(); ++c) {
      if (std::abs(at(r, c) - std::conj(at(c, r))) > tolerance) return false;
    }
  }
  return true;
}

namespace {

template <typename Element>
CompressedMatrix compress(const Element& x, unsigned level) {
  CompressedMatrix out;
  out.level = level;
  out.states = basis_states(x.dim(), level);
  std::map<Occupation, std::size_t> index;
  for (std::size_t j = 0; j < out.states.size(); ++j) index[out.states[j]] = j;
  const std::size_t n = out.states.size();
  out.entries.assign(n * n, 0.0);
  for (std::size_t col = 0; col < n; ++col) {
    const FockVector image = apply(x, FockVector::basis(out.states[col]));
    for (const auto& [m, amp] : image.amplitudes) {
      auto it = index.find(m);
      if (it != index.end()) out.entries[it->second * n + col] = amp;
    }
  }
  return out;
}

}  // namespace

CompressedMatrix compressed_matrix(const WeylElement& x, unsigned level) { return compress(x, level); }
CompressedMatrix compressed_matrix(const LocalizedElement& x, unsigned level) { return compress(x, level); }

MinEigResult min_eig_interior(const WeylElement& c, const Rational& epsilon, unsigned level) {
  if (!is_hermitean(c)) throw std::invalid_argument("element is not hermitean");
  const unsigned deg = degree(c).value_or(0);
  if (level <= deg) {
    throw std::invalid_argument("level " + std::to_string(level) + " leaves no guard band for degree " +
                                std::to_string(deg));
  }
  MinEigResult out;
  out.level = level;
  out.interior_level = level - deg;
  const auto states = basis_states(c.dim(), out.interior_level);
  const std::size_t n = states.size();

  // Diagonal entries are exact: <e_n, c e_n> = <f_n, c f_n> / n!.
  bool diagonal = true;
  std::optional<Rational> exact_min;
  std::size_t exact_arg = 0;
  Eigen::MatrixXcd m(n, n);
  std::map<Occupation, std::size_t> index;
  for (std::size_t j = 0; j < n; ++j) index[states[j]] = j;
  for (std::size_t col = 0; col < n; ++col) {
    const auto image = apply(c, ExactFockVector::basis(states[col]));
    const Integer col_fact = multi_factorial(states[col]);
    for (std::size_t row = 0; row < n; ++row) m(row, col) = 0.0;
    for (const auto& [occ, amp] : image.amplitudes) {
      auto it = index.find(occ);
      if (it == index.end()) continue;
      // c f_n = sum_m amp_m f_m, so <e_m, c e_n> = amp_m sqrt(m!/n!).
      const double scale = std::sqrt(Rational(Rational(multi_factorial(occ)) / Rational(col_fact)).get_d());
      m(it->second, col) = amp.to_complex() * scale;
      if (it->second != col) {
        diagonal = false;
      } else {
        if (!amp.is_real() || !amp.real().is_rational()) diagonal = false;
        const Rational value = amp.real().rational_part();
        if (!exact_min || value < *exact_min) {
          exact_min = value;
          exact_arg = col;
        }
      }
    }
    if (image.amplitudes.find(states[col]) == image.amplitudes.end() && (!exact_min || 0 < *exact_min)) {
      exact_min = Rational(0);
      exact_arg = col;
    }
  }

  if (diagonal && exact_min) {
    out.exact_value = *exact_min - epsilon;
    out.value = out.exact_value->get_d();
    out.falsified = *out.exact_value < 0;
    out.witness = FockVector::basis(states[exact_arg]);
    out.dominant_state = states[exact_arg];
    return out;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigen-solver failed");
  out.value = solver.eigenvalues()(0) - epsilon.get_d();
  out.falsified = out.value < -kMinEigTolerance;
  out.witness.dim = c.dim();
  double best = -1;
  for (std::size_t j = 0; j < n; ++j) {
    const auto amp = solver.eigenvectors()(j, 0);
    if (std::abs(amp) > 1e-14) out.witness.amplitudes[states[j]] = amp;
    if (std::abs(amp) > best) {
      best = std::abs(amp);
      out.dominant_state = states[j];
    }
  }
  return out;
}

LocalizedElement x_power(const Occupation& n, const Rational& alpha) {
  const std::size_t dim = n.size();
  LocalizedElement out = LocalizedElement::one(dim, alpha);
  for (std::size_t j = 0; j < dim; ++j) {
    out = l_mul(out, l_power(make_x(dim, alpha, static_cast<int>(j) + 1, 0), n[j]));
  }
  return out;
}

Rational gram_lemma42(const Occupation& k, const Occupation& n, const Rational& alpha) {
  if (k.size() != n.size()) throw std::invalid_argument("multi-index lengths differ");
  const auto e0 = ExactFockVector::vacuum(k.size());
  const auto u = apply(l_adjoint(x_power(k, alpha)), e0);
  const auto v = apply(l_adjoint(x_power(n, alpha)), e0);
  const Scalar value = inner(u, v);
  if (!value.is_rational()) throw std::logic_error("Gram entry is not rational");
  return value[Scalar::kOne];
}

Rational gram_closed_form(const Occupation& k, const Occupation& n, const Rational& alpha) {
  if (k != n) return Rational(0);
  Rational denom = 1;
  for (unsigned j = 1; j <= total(n); ++j) denom *= alpha + j;
  return Rational(multi_factorial(n)) / (denom * denom);
}

std::string to_string(const Occupation& n) {
  std::string out = "(";
  for (std::size_t j = 0; j < n.size(); ++j) out += (j ? "," : "") + std::to_string(n[j]);
  return out + ")";
}

}  // namespace weylps
