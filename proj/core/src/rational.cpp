#include "weylps/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace weylps {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

// Floor of a rational as an integer.
Integer floor_of(const Rational& q) {
  Integer result;
  mpz_fdiv_q(result.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  std::string n(num.front() == '+' ? num.substr(1) : num);
  Integer numerator(n, 10);
  Integer denominator(std::string(den), 10);
  if (denominator == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational result(numerator, denominator);
  result.canonicalize();
  return result;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational rationalize(double x, long max_denominator) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot rationalize a non-finite value");
  if (max_denominator < 1) max_denominator = 1;
  Rational target(x);  // exact binary value
  // Convergents h/k of the continued fraction of target.
  Integer h_prev = 1, h = floor_of(target);
  Integer k_prev = 0, k = 1;
  Rational rest = target - Rational(h);
  const Integer limit = max_denominator;
  while (rest != 0) {
    Rational inv = 1 / rest;
    Integer a = floor_of(inv);
    Integer k_next = a * k + k_prev;
    if (k_next > limit) {
      // Largest admissible semiconvergent.
      Integer t = (limit - k_prev) / k;
      Integer hs = t * h + h_prev, ks = t * k + k_prev;
      Rational semi(hs, ks), conv(h, k);
      semi.canonicalize();
      conv.canonicalize();
      if (ks > 0 && abs(semi - target) < abs(conv - target)) return semi;
      return conv;
    }
    Integer h_next = a * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    rest = inv - Rational(a);
  }
  Rational result(h, k);
  result.canonicalize();
  return result;
}

Rational simplest_between(const Rational& lo_in, const Rational& hi_in) {
  Rational lo = lo_in, hi = hi_in;
  if (lo > hi) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return Rational(0);
  bool negative = hi < 0;
  if (negative) {
    Rational t = -lo;
    lo = -hi;
    hi = t;
  }
  // Stern-Brocot descent on [lo, hi] with 0 < lo.
  Integer fl = floor_of(lo);
  Rational result;
  if (Rational(fl) == lo) {
    result = lo;
  } else if (Rational(fl + 1) <= hi) {
    result = Rational(fl + 1);
  } else {
    Rational inner = simplest_between(1 / (hi - Rational(fl)), 1 / (lo - Rational(fl)));
    result = Rational(fl) + 1 / inner;
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

Integer factorial(unsigned n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer binomial(unsigned n, unsigned k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

}  // namespace weylps
