#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "trigbound/leibniz.hpp"
#include "trigbound/positivity.hpp"

using namespace trigbound;

TEST_CASE("dense polynomial arithmetic") {
  const DensePoly a = DensePoly::from_integers({1, 2, 3});
  const DensePoly b = DensePoly::from_integers({-1, 1});
  CHECK(a.degree() == 2);
  CHECK((a * b) == DensePoly::from_integers({-1, -1, -1, 3}));
  CHECK((a + b) == DensePoly::from_integers({0, 3, 3}));
  CHECK((a - a).is_zero());
  CHECK((-b) == DensePoly::from_integers({1, -1}));
  CHECK(DensePoly::from_integers({1, 0, 0}).degree() == 0);
  CHECK(a.coeff(5) == Rational(0));
  CHECK(a.evaluate(Rational(1, 2)) == Rational(11, 4));

  EvenPolynomial e;
  e.add_term(0, Rational(2));
  e.add_term(4, Rational(-1, 15));
  const DensePoly d = DensePoly::from_even(e);
  CHECK(d.degree() == 4);
  CHECK(d.coeff(4) == Rational(-1, 15));
  CHECK(d.coeff(2) == Rational(0));
}

TEST_CASE("taylor shift agrees with direct evaluation") {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<long> c(-50, 50);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<long> coeffs(8);
    for (long& v : coeffs) v = c(gen);
    const DensePoly p = DensePoly::from_integers(coeffs);
    const Rational a(c(gen), 7);
    const DensePoly s = p.taylor_shift(a);
    for (int j = 0; j < 5; ++j) {
      const Rational t(c(gen), 11);
      CHECK(s.evaluate(t) == p.evaluate(a + t));
    }
  }
}

TEST_CASE("certify_positive examples") {
  const DensePoly x2 = DensePoly::from_integers({0, 0, 1});
  CHECK(certify_positive(x2, Rational(0), Rational(1)).status == Status::Proved);

  const DensePoly x2m4 = DensePoly::from_integers({-4, 0, 1});
  const Certificate neg = certify_positive(x2m4, Rational(0), Rational(1));
  CHECK(neg.status == Status::CounterexampleFound);
  REQUIRE(neg.counterexample.has_value());
  CHECK(x2m4.evaluate(Rational::parse(*neg.counterexample)).sign() <= 0);
  CHECK(certify_positive(-x2m4, Rational(0), Rational(1)).status == Status::Proved);

  // Zeros at both ends are factored out.
  CHECK(certify_positive(DensePoly::from_integers({0, 1, -1}), Rational(0), Rational(1)).status == Status::Proved);
  // A double root inside the interval.
  const DensePoly sq = DensePoly::from_integers({1, -4, 4});
  PositivityOptions small;
  small.max_leaves = 2000;
  CHECK(certify_positive(sq, Rational(0), Rational(1), small).status != Status::Proved);

  CHECK_THROWS_AS(certify_positive(x2, Rational(1), Rational(0)), std::invalid_argument);
}

TEST_CASE("rational functions") {
  const RationalFunction ok(DensePoly::from_integers({1, 1}), DensePoly::from_integers({2, -1}));
  CHECK(certify_positive(ok, Rational(0), Rational(1)).status == Status::Proved);
  const RationalFunction both_negative(DensePoly::from_integers({-1, -1}), DensePoly::from_integers({-2, 1}));
  CHECK(certify_positive(both_negative, Rational(0), Rational(1)).status == Status::Proved);
  const RationalFunction pole(DensePoly::from_integers({1}), DensePoly::from_integers({-1, 2}));
  CHECK(certify_positive(pole, Rational(0), Rational(1)).status != Status::Proved);
  CHECK_THROWS_AS(RationalFunction(DensePoly::from_integers({1}), DensePoly()), std::invalid_argument);
}

TEST_CASE("Bercu denominator is positive on 10^3 rational points") {
  const DensePoly den = DensePoly::from_integers(bercu_denominator());
  for (const auto& x : oracle::samples(1000, 1.5707963, 51)) {
    CHECK(den.evaluate(Rational(x.get_num(), x.get_den())).sign() > 0);
  }
  CHECK(den.evaluate(half_pi_upper()).sign() > 0);
  CHECK(certify_positive(den, Rational(0), half_pi_upper()).status == Status::Proved);
}

TEST_CASE("Bercu polynomial") {
  const EvenPolynomial p = bercu_polynomial(5);
  CHECK(p.coeff(0) == Rational(2));
  CHECK(p.coeff(4) == Rational(2, 45));
  CHECK(p.coeff(10) == Rational(16, 93555));
  CHECK(p.degree() == 10);
  CHECK_THROWS_AS(bercu_check(1), std::invalid_argument);
}

TEST_CASE("Bercu comparison") {
  const Certificate seven = bercu_check(7);
  CHECK(seven.status == Status::Proved);
  CHECK(seven.claim == "bercu-m7");
  CHECK(seven.interval == "(0,pi/2)");

  CHECK(bercu_check(7, Rational(157, 100)).status == Status::Proved);

  const Certificate two = bercu_check(2);
  CHECK(two.status == Status::CounterexampleFound);
  REQUIRE(two.counterexample.has_value());
  const Rational x = Rational::parse(*two.counterexample);
  const DensePoly num = DensePoly::from_integers(bercu_numerator());
  const DensePoly den = DensePoly::from_integers(bercu_denominator());
  const DensePoly diff = DensePoly::from_even(bercu_polynomial(2)) * den - num;
  CHECK(diff.evaluate(x).sign() <= 0);
}
