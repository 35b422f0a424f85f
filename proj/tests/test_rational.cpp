#include "doctest.h"

#include <random>
#include <vector>

#include "corrterms/errors.hpp"
#include "corrterms/rational.hpp"

using corrterms::Rational;
using corrterms::invalid_input;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(0, 7).den() == 1);
  CHECK(Rational(0, -7) == Rational(0));
  CHECK(Rational(10, 5).is_integer());
  CHECK(Rational(10, 5).num() == 2);
  CHECK(Rational(7, 3).den() == 3);
}

TEST_CASE("zero denominator and division by zero are rejected") {
  CHECK_THROWS_AS(Rational(1, 0), invalid_input);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), invalid_input);
}

TEST_CASE("field operations are exact") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 2) / Rational(1, 3) == Rational(3, 2));
  CHECK(-Rational(1, 5) == Rational(-1, 5));
  CHECK(Rational(1) - Rational(2, 1) == Rational(-1));
  // The denominators that actually occur downstream.
  CHECK(Rational(1) - Rational(27, 13) - Rational(2) == Rational(-40, 13));
}

TEST_CASE("ordering compares by value") {
  std::vector<Rational> sorted = {Rational(-9, 5), Rational(-1), Rational(-1, 5),
                                  Rational(0),     Rational(1, 5), Rational(1)};
  for (size_t i = 0; i + 1 < sorted.size(); ++i) {
    CHECK(sorted[i] < sorted[i + 1]);
    CHECK(sorted[i + 1] > sorted[i]);
  }
  CHECK(Rational(1, 3) <= Rational(2, 6));
  CHECK(Rational(1, 3) >= Rational(2, 6));
}

TEST_CASE("string rendering and parsing round-trip") {
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(-9, 5).str() == "-9/5");
  CHECK(Rational(1, 5).str() == "1/5");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-9/5") == Rational(-9, 5));
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), invalid_input);
  CHECK_THROWS_AS(Rational::parse("abc"), invalid_input);
  CHECK_THROWS_AS(Rational::parse("1.5"), invalid_input);
  CHECK_THROWS_AS(Rational::parse(""), invalid_input);
}

TEST_CASE("randomized arithmetic identities") {
  std::mt19937 rng(20260819u);
  std::uniform_int_distribution<long long> num(-60, 60);
  std::uniform_int_distribution<long long> den(1, 24);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    const Rational c(num(rng), den(rng));
    CHECK((a + b) - b == a);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(Rational::parse(a.str()) == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}
