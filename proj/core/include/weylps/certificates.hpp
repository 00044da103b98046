#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylps/upoly.hpp"
#include "weylps/weyl_algebra.hpp"

namespace weylps {

/// Univariate polynomial in nu (standing for N), rational coefficients low-to-high.
using NPolynomial = UPoly<Rational>;

/// nu^{(k)} = nu (nu - 1) ... (nu - k + 1).
NPolynomial falling_factorial(unsigned k);
/// (nu - 1)(nu - 2) + epsilon.
NPolynomial c_epsilon(const Rational& epsilon);
/// prod_i (nu + alpha + n_i).
NPolynomial b_polynomial(const Rational& alpha, const std::vector<int>& shifts);

/// p(N) in W(1).
WeylElement to_weyl(const NPolynomial& p);
/// The polynomial p with c = p(N) when c in W(1) is a rational polynomial in N.
std::optional<NPolynomial> to_n_polynomial(const WeylElement& c);

std::string to_string(const NPolynomial& p);

struct NaturalsVerdict {
  bool positive = true;                 // p(n) >= 0 for all n in N_0
  std::optional<unsigned long> witness; // n with p(n) < 0
};
/// Exact: leading-sign check plus evaluation at every n up to the Cauchy root bound.
NaturalsVerdict is_positive_on_naturals(const NPolynomial& p);
/// p(n) > 0 for all n; the witness, if any, has p(n) <= 0.
NaturalsVerdict is_strictly_positive_on_naturals(const NPolynomial& p);

struct RealsVerdict {
  bool nonnegative = true;
  /// Square-free factorization p = lead * prod_i f_i^{i+1} (entry i holds f_{i+1}).
  Rational lead;
  std::vector<NPolynomial> square_free_factors;
  std::optional<Rational> witness;  // t with p(t) < 0
};
RealsVerdict is_nonneg_on_reals(const NPolynomial& s);

struct Level {
  unsigned k = 0;
  NPolynomial s;
  friend bool operator==(const Level&, const Level&) = default;
};

/// sum_k nu^{(k)} s_k.
NPolynomial expand_levels(const std::vector<Level>& levels);

enum class Membership { Member, NotMember, Inconclusive };
std::string membership_name(Membership m);

struct Sigma2Result {
  Membership status = Membership::Inconclusive;
  std::vector<Level> levels;  // Member only; zero levels omitted
  /// NotMember certificate from the numerical route: a functional y on polynomials of
  /// degree <= deg p with y(p) < 0 and y(nu^{(k)} q^2) >= 0 for every admissible q.
  std::optional<std::vector<Rational>> dual_moments;
  std::optional<unsigned long> natural_witness;  // NotMember because p(n) < 0
  std::string method;  // "closed-form", "sdp", "naturals"
  std::string note;
};

struct Sigma2Options {
  double tolerance = 1e-8;
  std::vector<long> denominator_bounds{16, 256, 4096, 65536, 1000000};
};

/// Decides p = sum_k nu^{(k)} s_k with s_k >= 0 on R, using k + deg s_k <= deg p.
/// Exact closed form for deg p <= 2; barrier SDP with exact rounding above.
Sigma2Result sigma2_membership(const NPolynomial& p, const Sigma2Options& options = {});

/// Exact check of a moment functional produced by sigma2_membership.
bool verify_dual_moments(const NPolynomial& p, const std::vector<Rational>& y);

struct PsCertificate {
  Rational alpha;
  std::vector<int> b_shifts;
  NPolynomial target;
  std::vector<Level> levels;
  std::vector<RealsVerdict> nonneg_witnesses;  // one per level, filled by the search
};

struct SearchResult {
  std::optional<PsCertificate> certificate;
  std::size_t candidates_tried = 0;
  std::size_t inconclusive = 0;
};

/// Enumerates b = prod (N + alpha + n_i), at most max_factors factors, |n_i| <= shift_range,
/// by factor count, then sum |n_i|, then lexicographically. Throws std::invalid_argument
/// unless p(n) > 0 for all naturals n and alpha is admissible.
SearchResult find_positivstellensatz(const NPolynomial& p, const Rational& alpha, unsigned max_factors,
                                     unsigned shift_range, const Sigma2Options& options = {});

struct CertificateCheck {
  bool valid = false;
  std::string reason;
};
CertificateCheck verify_certificate(const PsCertificate& cert);

/// Levels s_0 = alpha^2/2 (nu-1)^2 (nu-2)^2 + eps (nu+alpha)^2, s_3 = 2 alpha + 3,
/// s_4 = 1 - alpha^2/2 for b = N + alpha and c_eps. With `plus_sign` the last
/// level is 1 + alpha^2/2 instead, which does not reproduce b c_eps b.
PsCertificate c_epsilon_certificate(const Rational& alpha, const Rational& epsilon, bool plus_sign = false);

/// sum_j a_j c a_{-j} for d = 1 hermitean c of degree 2 mod 4. Throws on wrong parity.
WeylElement odd_case_reduce(const WeylElement& c);
/// a p(N) a^* = (N + 1) p(N + 1).
NPolynomial odd_case_reduce(const NPolynomial& p);

}  // namespace weylps
