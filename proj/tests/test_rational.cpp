#include <catch2/catch_amalgamated.hpp>

#include "phylotri/rational.hpp"

using phylotri::Rational;

TEST_CASE("rational arithmetic reduces") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
  CHECK(Rational(3, 4) - Rational(1, 4) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(-4, 6) == Rational(-2, 3));
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK(Rational(0, 5) == Rational(0));
}

TEST_CASE("rational comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(2, 4) >= Rational(1, 2));
  CHECK(Rational(1, 2) != Rational(1, 3));
  CHECK(Rational(3).is_positive());
  CHECK(Rational(-3).is_negative());
  CHECK(Rational(0).is_zero());
}

TEST_CASE("rational accumulation stays exact") {
  Rational t(0);
  for (int i = 0; i < 100; i++) t += Rational(1, 7);
  CHECK(t == Rational(100, 7));
  t -= Rational(2, 7);
  CHECK(t == Rational(14));
}

TEST_CASE("rational rendering") {
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(5, 2).str() == "5/2");
  CHECK(Rational(-5, 2).str() == "-5/2");
  CHECK(Rational(0).str() == "0");
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-2") == Rational(-2));
  CHECK(Rational::parse("5/2") == Rational(5, 2));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("2x"), std::invalid_argument);
}

TEST_CASE("rational rejects zero denominators and overflow") {
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  Rational big(INT64_MAX / 2);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}
