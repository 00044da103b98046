#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "oracles.hpp"
#include "weylps/certificates.hpp"
#include "weylps/fock.hpp"

using namespace weylps;
using weylps::testing::Rng;

namespace {

/// Random vector supported on |n| <= level.
ExactFockVector random_vector(Rng& rng, std::size_t dim, unsigned level) {
  ExactFockVector v{dim, {}};
  for (const auto& n : basis_states(dim, level)) {
    if (weylps::testing::uniform_int(rng, 0, 2) == 0) continue;
    v.add(n, weylps::testing::small_scalar(rng));
  }
  return v;
}

unsigned long long choose(unsigned n, unsigned k) { return binomial(n, k).get_ui(); }

}  // namespace

TEST_SUITE("fock") {
  TEST_CASE("basis states are graded-lex and complete") {
    auto s = basis_states(2, 2);
    REQUIRE(s.size() == 6);
    CHECK(s[0] == Occupation{0, 0});
    CHECK(s[1] == Occupation{1, 0});
    CHECK(s[2] == Occupation{0, 1});
    for (std::size_t d = 1; d <= 3; ++d) CHECK(basis_states(d, 4).size() == choose(4 + d, d));
  }

  TEST_CASE("ladder operators on the orthonormal basis") {
    auto v = apply(WeylElement::generator(1, -1), FockVector::basis({2}));
    CHECK(std::abs(v.amplitudes.at({3}) - std::sqrt(3.0)) < 1e-12);
    auto w = apply(WeylElement::generator(1, 1), FockVector::basis({2}));
    CHECK(std::abs(w.amplitudes.at({1}) - std::sqrt(2.0)) < 1e-12);
    CHECK(apply(WeylElement::generator(1, 1), FockVector::basis({0})).amplitudes.empty());
    auto n = apply(number_operator(2, 0), ExactFockVector::basis({2, 3}));
    CHECK(n.amplitudes.at({2, 3}) == Scalar(5));
  }

  TEST_CASE("exact inner product uses <f_n, f_n> = n!") {
    CHECK(inner(ExactFockVector::basis({3}), ExactFockVector::basis({3})) == Scalar(6));
    CHECK(inner(ExactFockVector::basis({2, 1}), ExactFockVector::basis({2, 1})) == Scalar(2));
    CHECK(inner(ExactFockVector::basis({1}), ExactFockVector::basis({2})) == Scalar(0));
  }

  TEST_CASE("adjoint symmetry and homomorphism on guard-banded vectors") {
    Rng rng(41);
    const unsigned level = 12;
    for (int t = 0; t < 100; ++t) {
      std::size_t d = static_cast<std::size_t>(weylps::testing::uniform_int(rng, 1, 2));
      auto x = weylps::testing::random_weyl(rng, d, 4, 3);
      auto y = weylps::testing::random_weyl(rng, d, 4, 3);
      unsigned guard = *degree(x * y + WeylElement::one(d));
      auto u = random_vector(rng, d, level - guard > 3 ? 3 : level - guard);
      auto v = random_vector(rng, d, level - guard > 3 ? 3 : level - guard);
      REQUIRE(inner(u, apply(x, v)) == inner(apply(adjoint(x), u), v));
      REQUIRE(apply(x * y, v) == apply(x, apply(y, v)));
    }
  }

  TEST_CASE("compressed matrix of a hermitean element is hermitean") {
    Rng rng(42);
    for (int t = 0; t < 20; ++t) {
      auto c = weylps::testing::random_hermitean(rng, 2, 3);
      auto m = compressed_matrix(c, 4);
      CHECK(m.size() == 15);
      CHECK(m.is_hermitean());
    }
  }

  TEST_CASE("min_eig_interior examples") {
    auto c = to_weyl(c_epsilon(Rational(1, 8)));
    auto r = min_eig_interior(c, Rational(1, 8), 12);
    CHECK_FALSE(r.falsified);
    REQUIRE(r.exact_value.has_value());
    CHECK(*r.exact_value == 0);
    CHECK(r.interior_level == 8);

    NPolynomial p(std::vector<Rational>{3, -4, 1});  // (N-1)(N-3)
    auto f = min_eig_interior(to_weyl(p), Rational(0), 12);
    CHECK(f.falsified);
    CHECK(f.value == doctest::Approx(-1.0));
    CHECK(f.dominant_state == Occupation{2});
  }

  TEST_CASE("min_eig_interior on a non-diagonal element") {
    // q^2 = (a + a^*)^2 / 2 >= 0 but is not >= 1/2 + something; its interior blocks have min eigenvalue > 0
    auto q = position(1, 1);
    auto r = min_eig_interior(q * q, Rational(0), 20);
    CHECK_FALSE(r.falsified);
    CHECK_FALSE(r.exact_value.has_value());
    auto s = min_eig_interior(q * q, Rational(1), 20);
    CHECK(s.falsified);
    CHECK_THROWS_AS(min_eig_interior(Scalar::i() * q, Rational(0), 20), std::invalid_argument);
    CHECK_THROWS_AS(min_eig_interior(q * q, Rational(0), 2), std::invalid_argument);
  }

  TEST_CASE("Gram values of x^n against closed form and a numeric oracle") {
    for (const Rational& alpha : {Rational(1, 2), Rational(5, 2)}) {
      for (std::size_t d = 1; d <= 2; ++d) {
        auto states = basis_states(d, 3);
        for (const auto& k : states) {
          for (const auto& n : states) {
            Rational g = gram_lemma42(k, n, alpha);
            CHECK(g == gram_closed_form(k, n, alpha));
            CHECK(g.get_d() == doctest::Approx(oracle::gram_numeric(k, n, alpha.get_d())).epsilon(1e-12));
          }
        }
      }
    }
    CHECK(gram_lemma42({1}, {1}, Rational(1, 2)) == Rational(4, 9));
  }

  TEST_CASE("x_k annihilates the vacuum and x_k^* raises it") {
    for (std::size_t d = 1; d <= 2; ++d) {
      for (int k = 1; k <= static_cast<int>(d); ++k) {
        auto vac = ExactFockVector::vacuum(d);
        CHECK(apply(make_x(d, Rational(1, 2), k, 0), vac).is_zero());
        auto up = apply(make_x(d, Rational(1, 2), 0, -k), vac);
        Occupation n(d, 0);
        n[static_cast<std::size_t>(k - 1)] = 1;
        REQUIRE(up.amplitudes.size() == 1);
        CHECK(up.amplitudes.at(n) == Scalar(Rational(2, 3)));  // y_0 a_{-k} e_0 = f_n / (1 + 1/2)
      }
    }
  }

  TEST_CASE("to_string") { CHECK(to_string(Occupation{2, 0, 1}) == "(2,0,1)"); }
}
