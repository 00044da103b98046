#include <doctest.h>

#include "generators.hpp"
#include "weylps/certificates.hpp"
#include "weylps/expression.hpp"

using namespace weylps;
using weylps::testing::Rng;

namespace {

WeylElement weyl(const std::string& text, std::size_t d = 1) { return evaluate_weyl(*parse_expression(text), d); }

}  // namespace

TEST_SUITE("expression") {
  TEST_CASE("documented examples") {
    CHECK(weyl("p(1)*q(1) - q(1)*p(1)") == Scalar(-1) * Scalar::i() * WeylElement::one(1));
    CHECK(weyl("(N-1)*(N-2) + 1/8") == to_weyl(c_epsilon(Rational(1, 8))));
    CHECK(weyl("adj(a(1))") == WeylElement::generator(1, -1));
  }

  TEST_CASE("precedence") {
    CHECK(weyl("-a(1)^2") == -power(WeylElement::generator(1, 1), 2));
    CHECK(weyl("2*a(1) + 3") == weyl("3 + a(1)*2"));
    CHECK(weyl("1 - 2 - 3") == Scalar(-4) * WeylElement::one(1));
    CHECK(weyl("(a(1) + ad(1))^2") == weyl("a(1)^2 + a(1)*ad(1) + ad(1)*a(1) + ad(1)^2"));
    CHECK(weyl("N(1) + N(2)", 2) == weyl("N", 2));
    CHECK(weyl("i*sqrt2*i") == Scalar(-1) * Scalar::sqrt2() * WeylElement::one(1));
    CHECK(weyl("a(1)^0") == WeylElement::one(1));
  }

  TEST_CASE("localized expressions") {
    auto v = evaluate(*parse_expression("x(1,0)*adj(x(1,0))"), 1, Rational(1, 2));
    REQUIRE(std::holds_alternative<LocalizedElement>(v));
    CHECK(std::get<LocalizedElement>(v) == make_x(1, Rational(1, 2), 1, 0) * make_x(1, Rational(1, 2), 0, -1));
    CHECK(evaluate_localized(*parse_expression("y(0)*(N + 1/2)"), 2, Rational(1, 2)) == LocalizedElement::one(2, Rational(1, 2)));
    CHECK_THROWS_AS(evaluate(*parse_expression("y(0)"), 1, std::nullopt), std::invalid_argument);
  }

  TEST_CASE("syntax errors carry line and column") {
    auto at = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
      try {
        parse_expression(text);
      } catch (const ParseError& e) {
        return {e.line(), e.column()};
      }
      return {0, 0};
    };
    CHECK(at("a(1) a(1)") == std::pair<std::size_t, std::size_t>{1, 6});
    CHECK(at("a(1) +") == std::pair<std::size_t, std::size_t>{1, 7});
    CHECK(at("a(1)\n + * 2") == std::pair<std::size_t, std::size_t>{2, 4});
    CHECK(at("(a(1)") .first == 1);
    CHECK(at("a(1)^-1").first == 1);
    CHECK(at("foo").first == 1);
    CHECK(at("1/0").first == 1);
  }

  TEST_CASE("index errors") {
    CHECK_THROWS_AS(weyl("a(2)"), std::invalid_argument);
    CHECK_THROWS_AS(weyl("a(0)"), std::invalid_argument);
    CHECK_THROWS_AS(weyl("N(3)", 2), std::invalid_argument);
  }

  TEST_CASE("printing is a parse fixpoint on random elements") {
    Rng rng(61);
    for (int t = 0; t < 300; ++t) {
      std::size_t d = static_cast<std::size_t>(weylps::testing::uniform_int(rng, 1, 3));
      auto x = weylps::testing::random_weyl(rng, d, 4);
      std::string printed = to_string(x);
      auto reparsed = weyl(printed, d);
      REQUIRE(reparsed == x);
      REQUIRE(to_string(reparsed) == printed);
    }
  }

  TEST_CASE("localized printing is a parse fixpoint") {
    Rng rng(62);
    const Rational alpha(1, 2);
    for (int t = 0; t < 100; ++t) {
      std::size_t d = static_cast<std::size_t>(weylps::testing::uniform_int(rng, 1, 2));
      auto x = weylps::testing::random_localized(rng, d, alpha);
      std::string printed = to_string(x);
      INFO(printed);
      auto reparsed = evaluate_localized(*parse_expression(printed), d, alpha);
      REQUIRE(reparsed == x);
      REQUIRE(to_string(reparsed) == printed);
    }
  }
}
