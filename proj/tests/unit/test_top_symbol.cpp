#include <doctest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "weylps/certificates.hpp"
#include "weylps/top_symbol.hpp"

using namespace weylps;
using weylps::testing::Rng;

namespace {

WeylElement a(std::size_t d, int k) { return WeylElement::generator(d, k); }

}  // namespace

TEST_SUITE("top_symbol") {
  TEST_CASE("symbol of N^2 and of (a + a^*)^2") {
    auto s = top_symbol(power(number_operator(1, 0), 2));
    CHECK(s.degree == 4);
    CHECK(to_string(s) == "z(1)^2*zb(1)^2");
    auto t = top_symbol(power(a(1, 1) + a(1, -1), 2));
    CHECK(t.degree == 2);
    CHECK(to_string(t) == "z(1)^2 + 2*z(1)*zb(1) + zb(1)^2");
    CHECK(t.is_hermitean());
    CHECK_THROWS(top_symbol(WeylElement::zero(1)));
  }

  TEST_CASE("graded multiplicativity (500 cases)") {
    Rng rng(21);
    for (int t = 0; t < 500; ++t) {
      std::size_t d = static_cast<std::size_t>(weylps::testing::uniform_int(rng, 1, 3));
      auto x = weylps::testing::random_nonzero_weyl(rng, d, 3);
      auto y = weylps::testing::random_nonzero_weyl(rng, d, 3);
      REQUIRE(top_symbol(x * y) == symbol_product(top_symbol(x), top_symbol(y)));
    }
  }

  TEST_CASE("symbol of a hermitean element is real on the sphere") {
    Rng rng(22);
    for (int t = 0; t < 50; ++t) {
      auto c = weylps::testing::random_hermitean(rng, 2, 4);
      if (c.is_zero()) continue;
      auto s = top_symbol(c);
      REQUIRE(s.is_hermitean());
      std::vector<std::complex<double>> z{{0.6, 0.0}, {0.0, 0.8}};
      CHECK(std::abs(s.evaluate(z).imag()) < 1e-12);
    }
  }

  TEST_CASE("d = 1 certified positivity with exact lower bound") {
    auto v = check_condition_ii(top_symbol(to_weyl(c_epsilon(Rational(1, 8)))));
    REQUIRE(std::holds_alternative<CertifiedPositive>(v));
    CHECK(std::get<CertifiedPositive>(v).lower_bound == 1);
    auto w = check_condition_ii(top_symbol(number_operator(1, 0) + Scalar(Rational(1, 2)) * (power(a(1, 1), 2) + power(a(1, -1), 2))));
    // |z|^2 + Re(z^2) = 1 + cos(2 theta) vanishes at theta = pi/2
    CHECK(std::holds_alternative<CertifiedZeroAt>(w));
    auto u = check_condition_ii(top_symbol(Scalar(3) * number_operator(1, 0) + Scalar(Rational(1, 2)) * (power(a(1, 1), 2) + power(a(1, -1), 2))));
    REQUIRE(std::holds_alternative<CertifiedPositive>(u));
    auto lb = std::get<CertifiedPositive>(u).lower_bound;
    CHECK(lb > 0);
    CHECK(lb <= 2);  // min of 3 + cos(2 theta)
  }

  TEST_CASE("d = 1 zero of (a + a^*)^2 at z = i") {
    auto v = check_condition_ii(top_symbol(power(a(1, 1) + a(1, -1), 2)));
    REQUIRE(std::holds_alternative<CertifiedZeroAt>(v));
    const auto& z = std::get<CertifiedZeroAt>(v);
    REQUIRE(z.exact.has_value());
    CHECK((*z.exact)[0] == Scalar::i());
    CHECK(std::abs(z.point[0] - std::complex<double>(0, 1)) < 1e-12);
  }

  TEST_CASE("d = 1 negative definite symbol and irrational zeros") {
    auto v = check_condition_ii(top_symbol(-power(number_operator(1, 0), 2)));
    REQUIRE(std::holds_alternative<CertifiedNegative>(v));
    CHECK(std::get<CertifiedNegative>(v).upper_bound < 0);
    // |z|^2 - sqrt2 Re(z^2) ... symbol 1 - sqrt2 cos(2 theta) has zeros at irrational angles
    WeylElement c = number_operator(1, 0) - Scalar(Rational(1, 2)) * Scalar::sqrt2() * (power(a(1, 1), 2) + power(a(1, -1), 2));
    auto w = check_condition_ii(top_symbol(c));
    REQUIRE(std::holds_alternative<CertifiedZeroAt>(w));
    auto z = std::get<CertifiedZeroAt>(w).point[0];
    CHECK(std::abs(std::abs(z) - 1.0) < 1e-9);
    double theta = std::arg(z);
    CHECK(std::abs(1.0 - std::sqrt(2.0) * std::cos(2 * theta)) < 1e-6);
  }

  TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(check_condition_ii(top_symbol(a(1, 1))), std::invalid_argument);
    CHECK_THROWS_AS(check_condition_ii(top_symbol(Scalar::i() * number_operator(1, 0))), std::invalid_argument);
  }

  TEST_CASE("d >= 2 is sampled and never certified") {
    auto v = check_condition_ii(top_symbol(power(number_operator(2, 0), 2)));
    REQUIRE(std::holds_alternative<HeuristicPositive>(v));
    CHECK(std::get<HeuristicPositive>(v).sampled_min == doctest::Approx(1.0));
    auto w = check_condition_ii(top_symbol(number_operator(2, 1)));
    CHECK(std::holds_alternative<Inconclusive>(w));
    auto again = check_condition_ii(top_symbol(power(number_operator(2, 0), 2)));
    CHECK(std::get<HeuristicPositive>(again).sampled_min == std::get<HeuristicPositive>(v).sampled_min);
  }

  TEST_CASE("circle polynomial matches direct evaluation") {
    Rng rng(23);
    for (int t = 0; t < 30; ++t) {
      auto c = weylps::testing::random_hermitean(rng, 1, 4);
      if (c.is_zero() || *degree(c) % 2 != 0) continue;
      auto s = top_symbol(c);
      for (double theta : {0.3, 1.1, 2.0, -0.7}) {
        std::complex<double> z = std::polar(1.0, theta);
        CHECK(detail::circle_value(s, theta) == doctest::Approx(s.evaluate(std::span(&z, 1)).real()).epsilon(1e-9));
      }
    }
  }
}
