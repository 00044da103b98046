#include "weylps/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "weylps/localized.hpp"
#include "weylps/sdp.hpp"

namespace weylps {

namespace {

unsigned long ceil_to_ulong(const Rational& x) {
  Integer q = x.get_num() / x.get_den();
  if (q * x.get_den() < x.get_num()) ++q;
  if (q < 0) return 0;
  return q.get_ui();
}

NaturalsVerdict scan_naturals(const NPolynomial& p, bool strict) {
  NaturalsVerdict out;
  if (p.is_zero()) {
    out.positive = !strict;
    if (strict) out.witness = 0;
    return out;
  }
  // Beyond the root bound p has the sign of its leading coefficient.
  const unsigned long last = p.degree() < 1 ? 0 : ceil_to_ulong(cauchy_bound(p)) + 1;
  for (unsigned long n = 0; n <= last; ++n) {
    const int s = sign(p.eval(Rational(static_cast<long>(n))));
    if (s < 0 || (strict && s == 0)) {
      out.positive = false;
      out.witness = n;
      return out;
    }
  }
  return out;
}

// Exact PSD test by symmetric elimination with diagonal pivots.
bool is_psd_exact(std::vector<std::vector<Rational>> m) {
  std::size_t n = m.size();
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (m[i][i] < 0) return false;
      if (m[i][i] > 0 && pivot == n) pivot = i;
    }
    if (pivot == n) {
      // Remaining diagonal is zero: PSD iff the remaining block vanishes.
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!done[i] && !done[j] && m[i][j] != 0) return false;
        }
      }
      return true;
    }
    done[pivot] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const Rational f = m[i][pivot] / m[pivot][pivot];
      for (std::size_t j = 0; j < n; ++j) {
        if (!done[j]) m[i][j] -= f * m[pivot][j];
      }
    }
  }
  return true;
}

std::vector<Level> nonzero_levels(std::vector<Level> levels) {
  levels.erase(std::remove_if(levels.begin(), levels.end(), [](const Level& l) { return l.s.is_zero(); }), levels.end());
  return levels;
}

Sigma2Result closed_form(const NPolynomial& p) {
  Sigma2Result out;
  out.method = "closed-form";
  const int D = p.degree();
  const Rational p0 = p.coefficient(0), p1 = p.coefficient(1), p2 = p.coefficient(2);
  auto member = [&](std::vector<Level> levels) {
    out.status = Membership::Member;
    out.levels = nonzero_levels(std::move(levels));
    return out;
  };
  auto not_member = [&](std::string note) {
    out.status = Membership::NotMember;
    out.note = std::move(note);
    return out;
  };
  if (D < 0) return member({});
  if (p.lead() < 0) return not_member("negative leading coefficient");
  if (p0 < 0) return not_member("p(0) < 0");
  if (D == 0) return member({{0, p}});
  if (D == 1) {
    // s_0 and s_1 are nonnegative constants.
    if (p1 < 0) return not_member("negative slope");
    return member({{0, NPolynomial::constant(p0)}, {1, NPolynomial::constant(p1)}});
  }
  // D == 2: p = s_0 + c_1 nu + c_2 nu(nu - 1), c_1, c_2 >= 0, deg s_0 <= 2.
  if (p1 + p2 >= 0) {
    return member({{0, NPolynomial::constant(p0)}, {1, NPolynomial::constant(p1 + p2)}, {2, NPolynomial::constant(p2)}});
  }
  // Here c_1 = 0 is optimal and s_0 = (p2 - c2) nu^2 + (p1 + c2) nu + p0 needs
  // g(c2) = (p1 + c2)^2 - 4 (p2 - c2) p0 <= 0 for some c2 in [0, p2].
  Rational c2 = -p1 - 2 * p0;
  if (c2 < 0) c2 = 0;
  if (c2 > p2) c2 = p2;
  const Rational g = (p1 + c2) * (p1 + c2) - 4 * (p2 - c2) * p0;
  if (g > 0) return not_member("discriminant of the level-0 remainder is positive for every admissible c_2");
  NPolynomial s0(std::vector<Rational>{p0, p1 + c2, p2 - c2});
  return member({{0, s0}, {2, NPolynomial::constant(c2)}});
}

Rational max_abs_coefficient(const NPolynomial& p) {
  Rational m = 0;
  for (const auto& c : p.coefficients()) m = std::max<Rational>(m, abs(c));
  return m;
}

std::vector<Rational> interior_functional(unsigned D) {
  // Positive combination of evaluations at D+1, ..., 2D+1, scaled to unit size.
  std::vector<Rational> y(D + 1, Rational(0));
  for (unsigned i = 0; i <= D; ++i) {
    const Rational n(D + 1 + i);
    Rational power = 1;
    const Rational scale = 1 / Rational(static_cast<long>(std::pow(2.0 * D + 1, D)));
    for (unsigned j = 0; j <= D; ++j) {
      y[j] += power * scale;
      power *= n;
    }
  }
  return y;
}

Rational apply_functional(const std::vector<Rational>& y, const NPolynomial& p) {
  Rational out = 0;
  for (int j = 0; j <= p.degree(); ++j) out += y[static_cast<std::size_t>(j)] * p.coefficient(static_cast<std::size_t>(j));
  return out;
}

}  // namespace

NaturalsVerdict is_positive_on_naturals(const NPolynomial& p) { return scan_naturals(p, false); }
NaturalsVerdict is_strictly_positive_on_naturals(const NPolynomial& p) { return scan_naturals(p, true); }

RealsVerdict is_nonneg_on_reals(const NPolynomial& s) {
  RealsVerdict out;
  if (s.is_zero()) return out;
  out.lead = s.lead();
  out.square_free_factors = square_free_decomposition(s);
  out.nonnegative = is_nonnegative_on_reals(s);
  if (s.degree() == 0) out.nonnegative = s.lead() >= 0;
  if (out.nonnegative) return out;
  if (s.degree() == 0) {
    out.witness = Rational(0);
    return out;
  }
  // Test points around the isolated roots; one of them is negative.
  const auto roots = isolate_real_roots(s);
  std::vector<Rational> candidates;
  if (roots.empty()) {
    candidates.push_back(Rational(0));
  } else {
    candidates.push_back(roots.front().lo - 1);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const auto& r = roots[i];
      const Rational left = i == 0 ? r.lo - 1 : roots[i - 1].hi;
      const Rational right = i + 1 == roots.size() ? r.hi + 1 : roots[i + 1].lo;
      if (r.lo == r.hi) {
        candidates.push_back((left + r.lo) / 2);
        candidates.push_back((r.hi + right) / 2);
      } else {
        candidates.push_back(r.lo);
        candidates.push_back(r.hi);
      }
    }
    candidates.push_back(roots.back().hi + 1);
  }
  for (const auto& t : candidates) {
    if (s.eval(t) < 0) {
      out.witness = t;
      break;
    }
  }
  return out;
}

std::string membership_name(Membership m) {
  switch (m) {
    case Membership::Member: return "Member";
    case Membership::NotMember: return "NotMember";
    case Membership::Inconclusive: return "Inconclusive";
  }
  return "?";
}

bool verify_dual_moments(const NPolynomial& p, const std::vector<Rational>& y) {
  const int D = p.degree();
  if (D < 0 || y.size() != static_cast<std::size_t>(D + 1)) return false;
  if (!(apply_functional(y, p) < 0)) return false;
  for (unsigned k = 0; k <= static_cast<unsigned>(D); ++k) {
    const unsigned m = (static_cast<unsigned>(D) - k) / 2 + 1;
    const NPolynomial ff = falling_factorial(k);
    std::vector<std::vector<Rational>> M(m, std::vector<Rational>(m));
    for (unsigned a = 0; a < m; ++a) {
      for (unsigned b = 0; b < m; ++b) {
        Rational v = 0;
        for (int i = 0; i <= ff.degree(); ++i) v += ff.coefficient(static_cast<std::size_t>(i)) * y[static_cast<std::size_t>(i) + a + b];
        M[a][b] = v;
      }
    }
    if (!is_psd_exact(std::move(M))) return false;
  }
  return true;
}

Sigma2Result sigma2_membership(const NPolynomial& p, const Sigma2Options& options) {
  Sigma2Result out;
  const auto naturals = is_positive_on_naturals(p);
  if (!naturals.positive) {
    out.status = Membership::NotMember;
    out.method = "naturals";
    out.natural_witness = naturals.witness;
    out.note = "p(" + std::to_string(*naturals.witness) + ") < 0";
    return out;
  }
  if (p.degree() <= 2) return closed_form(p);
  out.method = "sdp";
  const unsigned D = static_cast<unsigned>(p.degree());
  const Rational scale = max_abs_coefficient(p);
  std::vector<double> scaled;
  for (const auto& c : p.coefficients()) scaled.push_back(Rational(c / scale).get_d());
  const auto sol = sdp::solve_falling_gram(scaled);

  if (sol.t > options.tolerance) {
    for (long bound : options.denominator_bounds) {
      std::vector<Level> levels;
      NPolynomial rest = p;
      for (unsigned k = 1; k <= D; ++k) {
        std::vector<Rational> coeffs;
        for (double v : sol.levels[k]) coeffs.push_back(rationalize(v, bound) * scale);
        NPolynomial s(coeffs);
        levels.push_back({k, s});
        rest = rest - falling_factorial(k) * s;
      }
      levels.insert(levels.begin(), Level{0, rest});
      bool ok = rest.degree() <= static_cast<int>(D);
      for (const auto& level : levels) ok = ok && is_nonneg_on_reals(level.s).nonnegative;
      if (ok) {
        out.status = Membership::Member;
        out.levels = nonzero_levels(std::move(levels));
        out.note = "rounded with denominators <= " + std::to_string(bound);
        return out;
      }
    }
    out.note = "strictly feasible numerically (t = " + std::to_string(sol.t) + ") but rounding failed";
    return out;
  }
  if (sol.t < -options.tolerance) {
    double ymax = 0;
    for (double v : sol.moments) ymax = std::max(ymax, std::abs(v));
    if (ymax > 0) {
      const auto interior = interior_functional(D);
      const Rational interior_value = apply_functional(interior, p);
      for (long bound : options.denominator_bounds) {
        std::vector<Rational> y;
        for (double v : sol.moments) y.push_back(rationalize(v / ymax, bound));
        if (verify_dual_moments(p, y)) {
          out.status = Membership::NotMember;
          out.dual_moments = y;
          out.note = "separating functional with denominators <= " + std::to_string(bound);
          return out;
        }
        const Rational value = apply_functional(y, p);
        if (!(value < 0)) continue;
        for (const Rational& fraction : {Rational(1, 2), Rational(1, 10), Rational(1, 100), Rational(1, 1000)}) {
          const Rational eta = interior_value > 0 ? Rational(-value * fraction / interior_value) : fraction;
          std::vector<Rational> mixed(y);
          for (std::size_t j = 0; j < mixed.size(); ++j) mixed[j] += eta * interior[j];
          if (verify_dual_moments(p, mixed)) {
            out.status = Membership::NotMember;
            out.dual_moments = mixed;
            out.note = "separating functional with denominators <= " + std::to_string(bound);
            return out;
          }
        }
      }
    }
    out.note = "numerically infeasible (t = " + std::to_string(sol.t) + ") but no exact separating functional found";
    return out;
  }
  out.note = "numerical margin within tolerance (t = " + std::to_string(sol.t) + ")";
  return out;
}

CertificateCheck verify_certificate(const PsCertificate& cert) {
  CertificateCheck out;
  if (cert.alpha <= 0) {
    out.reason = "alpha must be positive";
    return out;
  }
  if (cert.alpha.get_den() == 1) {
    out.reason = "alpha must not be an integer";
    return out;
  }
  for (const auto& level : cert.levels) {
    if (!is_nonneg_on_reals(level.s).nonnegative) {
      out.reason = "nonnegativity of level " + std::to_string(level.k);
      return out;
    }
  }
  const NPolynomial b = b_polynomial(cert.alpha, cert.b_shifts);
  if (b * cert.target * b != expand_levels(cert.levels)) {
    out.reason = "identity b p b = sum_k N^(k) s_k fails";
    return out;
  }
  out.valid = true;
  return out;
}

SearchResult find_positivstellensatz(const NPolynomial& p, const Rational& alpha, unsigned max_factors,
                                     unsigned shift_range, const Sigma2Options& options) {
  validate_alpha(alpha);
  const auto strict = is_strictly_positive_on_naturals(p);
  if (!strict.positive) {
    throw std::invalid_argument("target is not strictly positive on the naturals (p(" +
                                std::to_string(*strict.witness) + ") <= 0)");
  }
  SearchResult result;
  const int R = static_cast<int>(shift_range);
  for (unsigned factors = 0; factors <= max_factors; ++factors) {
    // Non-decreasing shift tuples, ordered by sum |n_i| and then lexicographically.
    std::vector<std::vector<int>> tuples;
    std::vector<int> current;
    std::function<void(int)> extend = [&](int from) {
      if (current.size() == factors) {
        tuples.push_back(current);
        return;
      }
      for (int v = from; v <= R; ++v) {
        current.push_back(v);
        extend(v);
        current.pop_back();
      }
    };
    extend(-R);
    std::stable_sort(tuples.begin(), tuples.end(), [](const std::vector<int>& x, const std::vector<int>& y) {
      int sx = 0, sy = 0;
      for (int v : x) sx += std::abs(v);
      for (int v : y) sy += std::abs(v);
      if (sx != sy) return sx < sy;
      return x < y;
    });
    for (const auto& shifts : tuples) {
      ++result.candidates_tried;
      const NPolynomial b = b_polynomial(alpha, shifts);
      const auto membership = sigma2_membership(b * p * b, options);
      if (membership.status == Membership::Inconclusive) ++result.inconclusive;
      if (membership.status != Membership::Member) continue;
      PsCertificate cert{alpha, shifts, p, membership.levels, {}};
      for (const auto& level : cert.levels) cert.nonneg_witnesses.push_back(is_nonneg_on_reals(level.s));
      if (!verify_certificate(cert).valid) continue;
      result.certificate = std::move(cert);
      return result;
    }
  }
  return result;
}

PsCertificate c_epsilon_certificate(const Rational& alpha, const Rational& epsilon, bool plus_sign) {
  const Rational half_a2 = alpha * alpha / 2;
  const NPolynomial q = NPolynomial::linear(-1) * NPolynomial::linear(-2);
  const NPolynomial shift = NPolynomial::linear(alpha);
  const NPolynomial s0 = (q * q).scaled(half_a2) + (shift * shift).scaled(epsilon);
  PsCertificate cert;
  cert.alpha = alpha;
  cert.b_shifts = {0};
  cert.target = c_epsilon(epsilon);
  cert.levels = {{0, s0},
                 {3, NPolynomial::constant(2 * alpha + 3)},
                 {4, NPolynomial::constant(plus_sign ? Rational(1 + half_a2) : Rational(1 - half_a2))}};
  for (const auto& level : cert.levels) cert.nonneg_witnesses.push_back(is_nonneg_on_reals(level.s));
  return cert;
}

}  // namespace weylps
