#include <doctest.h>

#include "printing.hpp"

#include <limits>
#include <random>
#include <stdexcept>

#include "tubes/rational.hpp"

using tubes::Rational;

TEST_CASE("rational normalizes to lowest terms") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).den() == 2);
  CHECK(Rational(0, -7) == Rational(0));
  CHECK(Rational(0, -7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic and ordering") {
  const Rational half(1, 2);
  const Rational third(1, 3);
  CHECK(half + third == Rational(5, 6));
  CHECK(half - third == Rational(1, 6));
  CHECK(half * third == Rational(1, 6));
  CHECK(half / third == Rational(3, 2));
  CHECK(third < half);
  CHECK(-half < third);
  CHECK_THROWS_AS(half / Rational(0), std::domain_error);
}

TEST_CASE("rational overflow is reported, not wrapped") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(Rational(1, 3).to_decimal(6) == "0.333333");
  CHECK(Rational(2, 3).to_decimal(6) == "0.666667");
  CHECK(Rational(-1, 8).to_decimal(2) == "-0.13");
  CHECK(Rational(27, 4).to_decimal(1) == "6.8");
  CHECK(Rational(-1, 3000000).to_decimal(6) == "0.000000");
  CHECK(Rational(13).to_decimal(0) == "13");
  CHECK(Rational(277, 27).str() == "277/27");
}

TEST_CASE("floor division and modulus") {
  CHECK(tubes::floor_div(-5, 4) == -2);
  CHECK(tubes::floor_div(5, 4) == 1);
  CHECK(tubes::floor_div(-8, 4) == -2);
  CHECK(tubes::mod_floor(-1, 5) == 4);
  CHECK(tubes::mod_floor(10, 5) == 0);
}

TEST_CASE("field axioms on random small rationals") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-50, 50);
  std::uniform_int_distribution<std::int64_t> den(1, 30);
  for (int i = 0; i < 500; ++i) {
    const Rational x(num(rng), den(rng));
    const Rational y(num(rng), den(rng));
    const Rational z(num(rng), den(rng));
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x - y + y == x);
    if (!y.is_zero()) CHECK(x / y * y == x);
  }
}
