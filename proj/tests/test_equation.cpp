#include <random>

#include "doctest.h"
#include "rado/equation.hpp"
#include "support.hpp"

using namespace rado;

TEST_SUITE("equation") {

TEST_CASE("pythagorean equation parses to two plus one terms") {
  const auto eq = parse_equation("x^2+y^2=z^2");
  CHECK(eq.degree() == 2);
  CHECK(eq.lhs() == std::vector<Term>{{1, "x", false}, {1, "y", false}});
  CHECK(eq.rhs() == std::vector<Term>{{1, "z", false}});
  CHECK(eq.free_vars().empty());
  CHECK_FALSE(eq.distinct_required());
}

TEST_CASE("tilde marks a free variable") {
  const auto eq = parse_equation("9x^2+16y^2=~n^2");
  CHECK(eq.degree() == 2);
  CHECK(eq.free_vars() == std::set<std::string>{"n"});
  CHECK(eq.constrained_count() == 2);
  CHECK(eq.to_string() == "9x^2+16y^2=~n^2");
}

TEST_CASE("schur equation has degree one and three constrained variables") {
  const auto eq = parse_equation("x+y=z");
  CHECK(eq.degree() == 1);
  CHECK(eq.constrained_count() == 3);
  CHECK(eq.to_string() == "x+y=z");
}

TEST_CASE("mixed degrees are rejected") {
  try {
    parse_equation("x^2+y=z^2");
    FAIL("expected an error");
  } catch (const EquationError& e) {
    CHECK(e.kind() == EquationError::Kind::MixedDegree);
  }
}

TEST_CASE("validation errors carry their kind") {
  auto kind_of = [](const char* text) {
    try {
      parse_equation(text);
    } catch (const EquationError& e) {
      return e.kind();
    }
    FAIL("expected an EquationError for " << text);
    return EquationError::Kind::BadFamily;
  };
  CHECK(kind_of("x+x=z") == EquationError::Kind::DuplicateVariable);
  CHECK(kind_of("x+y=x") == EquationError::Kind::DuplicateVariable);
  CHECK(kind_of("~x=~y") == EquationError::Kind::AllVariablesFree);
  CHECK(kind_of("0x+y=z") == EquationError::Kind::BadCoefficient);
  CHECK(kind_of("1000001x+y=z") == EquationError::Kind::BadCoefficient);
  CHECK(kind_of("x+~y=~z") == EquationError::Kind::TooManyFreeVariables);
  try {
    Equation({{1, "x", false}}, {{1, "y", false}}, 3);
    FAIL("expected an EquationError");
  } catch (const EquationError& e) {
    CHECK(e.kind() == EquationError::Kind::BadDegree);
  }
}

TEST_CASE("syntax errors report a position") {
  CHECK_THROWS_AS(parse_equation(""), ParseError);
  CHECK_THROWS_AS(parse_equation("x+y"), ParseError);
  CHECK_THROWS_AS(parse_equation("x+=z"), ParseError);
  CHECK_THROWS_AS(parse_equation("x+y=z=w"), ParseError);
  CHECK_THROWS_AS(parse_equation("x+y=z;unique"), ParseError);
  CHECK_THROWS_AS(parse_equation("x^3+y^3=z^3"), ParseError);
  try {
    parse_equation("x+y=z)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("sides are ordered canonically") {
  CHECK(parse_equation("w^2=z^2+y^2+x^2").to_string() == "x^2+y^2+z^2=w^2");
  CHECK(parse_equation("b+a=d+c").to_string() == "a+b=c+d");
  CHECK(parse_equation("c+d=a+b").to_string() == "a+b=c+d");
  CHECK(parse_equation("3y+x=z") == parse_equation("x+3y=z"));
  CHECK(parse_equation("2x = y ; distinct").to_string() == "y=2x;distinct");
}

TEST_CASE("distinct flag round-trips") {
  const auto eq = parse_equation("9x^2+16y^2=~n^2;distinct");
  CHECK(eq.distinct_required());
  CHECK(parse_equation(eq.to_string()) == eq);
  CHECK(eq.with_distinct(false).to_string() == "9x^2+16y^2=~n^2");
}

TEST_CASE("family equations") {
  CHECK(family_equation(3).to_string() == "x1^2+x2^2+x3^2=z^2");
  CHECK(family_equation(2).to_string() == "x1^2+x2^2=z^2");
  const auto e17 = family_equation(17);
  CHECK(e17.variable_count() == 18);
  CHECK_THROWS_AS(family_equation(1), EquationError);
  CHECK_THROWS_AS(family_equation(64), EquationError);
  for (int k = 2; k <= 20; ++k) {
    const auto eq = family_equation(k);
    CHECK(eq.variable_count() == static_cast<std::size_t>(k) + 1);
    CHECK(eq.constrained_count() == static_cast<std::size_t>(k) + 1);
    CHECK(eq.degree() == 2);
    for (const auto& t : eq.terms()) CHECK(t.coefficient == 1);
  }
}

TEST_CASE("family equation for k=3 is the three-squares equation up to renaming") {
  const auto a = family_equation(3);
  const auto b = parse_equation("x^2+y^2+z^2=w^2");
  CHECK(a.lhs().size() == b.lhs().size());
  CHECK(a.rhs().size() == b.rhs().size());
  CHECK(a.degree() == b.degree());
}

TEST_CASE("render then parse is the identity on random equations") {
  std::mt19937_64 rng(11);
  testing::RandomEquationOptions opt;
  opt.max_variables = 8;
  opt.max_coefficient = 1000;
  for (int i = 0; i < 2000; ++i) {
    const auto eq = testing::random_equation(rng, opt);
    const auto text = eq.to_string();
    const auto back = parse_equation(text);
    REQUIRE_MESSAGE(back == eq, text);
    // normalizing a normalized equation changes nothing
    CHECK(Equation(back.lhs(), back.rhs(), back.degree(), back.distinct_required()) == back);
    CHECK(back.to_string() == text);
  }
}

TEST_CASE("normalization ignores input order") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto eq = testing::random_equation(rng);
    auto lhs = eq.lhs();
    auto rhs = eq.rhs();
    std::shuffle(lhs.begin(), lhs.end(), rng);
    std::shuffle(rhs.begin(), rhs.end(), rng);
    CHECK(Equation(rhs, lhs, eq.degree(), eq.distinct_required()) == eq);
  }
}

}  // TEST_SUITE
