#include <catch2/catch_amalgamated.hpp>

#include "ddt/rational.hpp"

using ddt::Rat;

TEST_CASE("construction normalizes to canonical form") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, 4) == Rat(-1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(0, 5) == Rat(0));
  CHECK(Rat(7, 1).den() == 1);
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 3) - Rat(1, 2) == Rat(-1, 6));
  CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
  CHECK(Rat(1, 3) / Rat(2, 3) == Rat(1, 2));
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
  // a sum that loses in double arithmetic
  Rat tenth(1, 10);
  Rat sum(0);
  for (int i = 0; i < 10; ++i) sum += tenth;
  CHECK(sum == Rat(1));
}

TEST_CASE("comparison uses cross multiplication") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(-1, 3));
  CHECK(Rat(7, 3) <= Rat(7, 3));
  CHECK(Rat(1000000000LL, 3) > Rat(999999999LL, 3));
}

TEST_CASE("parse and print round-trip") {
  CHECK(Rat::parse("5") == Rat(5));
  CHECK(Rat::parse("5/1") == Rat(5));
  CHECK(Rat::parse("-3/6") == Rat(-1, 2));
  CHECK(Rat(38, 5).str() == "38/5");
  CHECK(Rat(-4).str() == "-4");
  CHECK_THROWS_AS(Rat::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/0"), std::domain_error);
}

TEST_CASE("overflow throws instead of wrapping") {
  Rat big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  CHECK_NOTHROW(big + Rat(1));
}

TEST_CASE("abs and integer checks") {
  CHECK(Rat(-3, 7).abs() == Rat(3, 7));
  CHECK(Rat(6, 3).is_integer());
  CHECK_FALSE(Rat(5, 3).is_integer());
}
