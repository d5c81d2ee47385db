#include <doctest.h>

#include <random>
#include <sstream>

#include "trigbound/rational.hpp"

using trigbound::BigInt;
using trigbound::Rational;

TEST_CASE("rational values are reduced with a positive denominator") {
  const Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational(10, 5).to_string() == "2");
  CHECK(Rational(0, -7).to_string() == "0");
  CHECK(Rational(0, -7).denominator() == 1);
}

TEST_CASE("zero denominators and division by zero are domain errors") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("parse accepts fractions, integers and decimals") {
  CHECK(Rational::parse("23/1890") == Rational(23, 1890));
  CHECK(Rational::parse("-4/6") == Rational(-2, 3));
  CHECK(Rational::parse("17") == Rational(17));
  CHECK(Rational::parse("2.4675") == Rational(24675, 10000));
  CHECK(Rational::parse("-0.001") == Rational(-1, 1000));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.-5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("3/0"), std::domain_error);
}

TEST_CASE("factorial") {
  CHECK(trigbound::factorial(0) == 1);
  CHECK(trigbound::factorial(7) == 5040);
  CHECK(trigbound::factorial(10) == 3628800);
  CHECK(trigbound::factorial(25) == BigInt("15511210043330985984000000"));
}

TEST_CASE("rat_pow") {
  CHECK(trigbound::rat_pow(Rational(3, 2), 2) == Rational(9, 4));
  CHECK(trigbound::rat_pow(Rational(-7, 3), 0) == Rational(1));
  CHECK(trigbound::rat_pow(Rational(2), -3) == Rational(1, 8));
  CHECK(trigbound::rat_pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK_THROWS_AS(trigbound::rat_pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("arithmetic is exact and commutative on random operands") {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 500; ++i) {
    const Rational a(num(gen), den(gen));
    const Rational b(num(gen), den(gen));
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a.denominator() > 0);
    CHECK(gcd(a.numerator(), a.denominator()) == 1);
  }
}

TEST_CASE("ordering and streaming") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  std::ostringstream os;
  os << Rational(-5, 10);
  CHECK(os.str() == "-1/2");
  CHECK(Rational(-5, 3).abs() == Rational(5, 3));
  CHECK(Rational(9, 3).is_integer());
}
