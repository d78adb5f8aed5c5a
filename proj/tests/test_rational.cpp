#include "domgreedy/rational.hpp"

#include <doctest.h>

using namespace domgreedy;

TEST_CASE("rational literals parse exactly and reduce") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("2/4") == make_rational(1, 2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-5")) == "-5");
  CHECK(to_string(parse_rational("123456789012345678901234567890/3")) ==
        "41152263004115226300411522630");
}

TEST_CASE("decimal and malformed literals are rejected") {
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("/2"), std::invalid_argument);
}

TEST_CASE("ceil and outward double conversion") {
  CHECK(ceil(make_rational(9, 2)) == 5);
  CHECK(ceil(make_rational(-9, 2)) == -4);
  CHECK(ceil(Rational(4)) == 4);
  const Rational third = make_rational(1, 3);
  CHECK(Rational(to_double_lower(third)) <= third);
  CHECK(Rational(to_double_upper(third)) >= third);
  CHECK(to_double_upper(Rational(2)) == 2.0);
}
