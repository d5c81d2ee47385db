#include <doctest.h>

#include <cmath>
#include <vector>

#include "support/oracles.hpp"
#include "trigbound/series_catalog.hpp"
#include "trigbound/wd.hpp"

using namespace trigbound;

namespace {

constexpr mpfr_prec_t kOraclePrec = 1000;

Rational to_rational(const mpq_class& q) { return Rational(q.get_num(), q.get_den()); }

BigFloat big(const oracle::Mp& v) {
  BigFloat b(mpfr_get_prec(v.get()));
  mpfr_set(b.get(), v.get(), MPFR_RNDN);
  return b;
}

oracle::Mp half_pi() {
  oracle::Mp p = oracle::pi(kOraclePrec);
  mpfr_div_ui(p.get(), p.get(), 2, MPFR_RNDN);
  return p;
}

oracle::Mp eval(const EvenPolynomial& p, const oracle::Mp& x) {
  oracle::Mp acc(kOraclePrec);
  oracle::Mp term(kOraclePrec);
  mpfr_set_zero(acc.get(), 1);
  for (const auto& [e, c] : p.terms()) {
    mpfr_pow_ui(term.get(), x.get(), static_cast<unsigned long>(e), MPFR_RNDN);
    mpfr_mul_q(term.get(), term.get(), c.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
  }
  return acc;
}

oracle::Mp oracle_endpoint(TargetId t) {
  oracle::Mp v = half_pi();
  if (t == TargetId::T5) {
    mpfr_sqr(v.get(), v.get(), MPFR_RNDN);
  } else {
    mpfr_mul_ui(v.get(), v.get(), 3, MPFR_RNDN);
  }
  return v;
}

// f(pi/2) - constant - sum_{2 <= k <= n} c_k (pi/2)^{2k}, with the exact series of each target.
oracle::Mp oracle_remainder(TargetId t, int n) {
  const oracle::Series s = oracle::derived_series(t, 2 * n);
  EvenPolynomial p;
  for (int k = 1; k <= n; ++k) p.add_term(2 * k, Rational(s[2 * k].get_num(), s[2 * k].get_den()));
  oracle::Mp r = oracle_endpoint(t);
  const oracle::Mp poly = eval(p, half_pi());
  mpfr_sub(r.get(), r.get(), poly.get(), MPFR_RNDN);
  mpfr_sub_ui(r.get(), r.get(), t == TargetId::T5 ? 2 : 4, MPFR_RNDN);
  return r;
}

EvenPolynomial poly(std::initializer_list<std::pair<int, Rational>> terms) {
  EvenPolynomial p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

TEST_CASE("wd bound examples") {
  const WdBound a = wd_bounds(TargetId::T5, 2);
  CHECK(a.constant == Rational(2));
  CHECK(a.lower == poly({{4, Rational(2, 45)}}));
  CHECK(a.upper_poly_part.is_zero());
  CHECK(a.correction_exponent == 4);
  CHECK(a.endpoint_value == EndpointValue::PiSqOver4);
  CHECK(a.correction_coefficient.contains(big(oracle_remainder(TargetId::T5, 1))));
  // (2/pi)^4 (pi^2/4 - 2)
  oracle::Mp expected = oracle::pi(kOraclePrec);
  oracle::Mp two_over_pi(kOraclePrec);
  mpfr_ui_div(two_over_pi.get(), 2, expected.get(), MPFR_RNDN);
  mpfr_pow_ui(two_over_pi.get(), two_over_pi.get(), 4, MPFR_RNDN);
  mpfr_sqr(expected.get(), expected.get(), MPFR_RNDN);
  mpfr_div_ui(expected.get(), expected.get(), 4, MPFR_RNDN);
  mpfr_sub_ui(expected.get(), expected.get(), 2, MPFR_RNDN);
  mpfr_mul(expected.get(), expected.get(), two_over_pi.get(), MPFR_RNDN);
  CHECK(a.correction_x_coefficient().contains(big(expected)));

  const WdBound b = wd_bounds(TargetId::T6, 3);
  CHECK(b.constant == Rational(4));
  CHECK(b.lower == poly({{4, Rational(1, 10)}, {6, Rational(1, 210)}}));
  CHECK(b.endpoint_value == EndpointValue::ThreePiOver2);
  CHECK(b.correction_exponent == 6);

  const WdBound c = wd_bounds(TargetId::T5, 4);
  CHECK(c.lower.degree() == 8);
  CHECK(c.lower.coeff(8) == Rational(2, 1575));
  CHECK(c.upper_poly_part == poly({{4, Rational(2, 45)}, {6, Rational(8, 945)}}));
}

TEST_CASE("wd errors") {
  CHECK_THROWS_AS(wd_bounds(TargetId::T1, 2), std::invalid_argument);
  CHECK_THROWS_AS(wd_bounds(TargetId::T5, 1), std::invalid_argument);
  CHECK_THROWS_AS(wd_bounds(TargetId::T6, 2), std::invalid_argument);
  CHECK(wd_min_order(TargetId::T5) == 2);
  CHECK(wd_min_order(TargetId::T6) == 3);
  CHECK_THROWS_AS(remainder_table(TargetId::T5, 1, 3, 6), std::invalid_argument);
  CHECK_THROWS_AS(remainder_table(TargetId::T5, 4, 3, 6), std::invalid_argument);
  CHECK_THROWS_AS(remainder_table(TargetId::T5, 2, 21, 6), std::invalid_argument);
  CHECK_THROWS_AS(remainder_table(TargetId::T5, 2, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(remainder_table(TargetId::T6, 2, 3, 51), std::invalid_argument);
  CHECK_THROWS_AS(remainder_table(TargetId::T2, 2, 3, 6), std::invalid_argument);
}

TEST_CASE("remainder tables match reference values") {
  const std::vector<double> t5{0.0696524, 0.0225863, 0.00694574, 0.00206173};
  const std::vector<double> t6{0.0320502, 0.00778176, 0.00195321, 0.000488251};
  const auto rows5 = remainder_table(TargetId::T5, 3, 6, 6);
  const auto rows6 = remainder_table(TargetId::T6, 3, 6, 6);
  REQUIRE(rows5.size() == 4);
  REQUIRE(rows6.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(rows5[i].n == static_cast<int>(i) + 3);
    CHECK(std::abs(std::stod(rows5[i].r_max) - t5[i]) <= 1e-4 * t5[i]);
    CHECK(std::abs(std::stod(rows6[i].r_max) - t6[i]) <= 1e-4 * t6[i]);
  }
  CHECK(rows5[0].r_max == "0.0696524");
  CHECK(rows6[3].r_max == "0.000488251");
}

TEST_CASE("remainder enclosures contain the oracle values") {
  for (TargetId t : {TargetId::T5, TargetId::T6}) {
    for (const auto& row : remainder_table(t, 2, 20, 30)) {
      CHECK_MESSAGE(row.enclosure.contains(big(oracle_remainder(t, row.n))), "n = " << row.n);
      CHECK(row.r_max.size() >= 30);
    }
  }
  const auto first = remainder_table(TargetId::T5, 2, 2, 6);
  const double r2 = oracle_remainder(TargetId::T5, 2).to_double();
  CHECK(std::abs(std::stod(first[0].r_max) - r2) <= 5e-6 * r2);
}

TEST_CASE("endpoint enclosures") {
  for (TargetId t : {TargetId::T5, TargetId::T6}) {
    for (mpfr_prec_t prec : {64, 128, 256}) {
      const Enclosure e = endpoint_enclosure(t, prec);
      CHECK(e.contains(big(oracle_endpoint(t))));
      CHECK(mpfr_get_exp(e.width().get()) < -static_cast<long>(prec) + 8);
    }
  }
}

TEST_CASE("the upper bound meets the target at pi/2") {
  for (TargetId t : {TargetId::T5, TargetId::T6}) {
    for (int m = wd_min_order(t); m <= 10; ++m) {
      const WdBound b = wd_bounds(t, m);
      const oracle::Mp hp = half_pi();
      oracle::Mp upper = eval(b.upper_poly_part, hp);
      mpfr_add_q(upper.get(), upper.get(), b.constant.raw().get_mpq_t(), MPFR_RNDN);
      const Enclosure total = Enclosure(b.correction_coefficient) + Enclosure::point(big(upper));
      CHECK(total.contains(big(oracle_endpoint(t))));
      CHECK(mpfr_get_exp(total.width().get()) < -200);
    }
  }
}

TEST_CASE("property: sandwich on 200 points for m <= 6") {
  const auto xs = oracle::samples(200, 1.5707963, 31);
  for (TargetId t : {TargetId::T5, TargetId::T6}) {
    for (int m = wd_min_order(t); m <= 6; ++m) {
      const WdBound b = wd_bounds(t, m);
      const oracle::Mp r = oracle_remainder(t, m - 1);
      long failures = 0;
      for (const auto& xq : xs) {
        const oracle::Mp f = oracle::target(t, xq, kOraclePrec);
        const Rational x = to_rational(xq);
        const Rational lower = b.constant + b.lower.evaluate(x);
        oracle::Mp upper = oracle::pi(kOraclePrec);
        // R (2x/pi)^{2m}
        mpfr_ui_div(upper.get(), 2, upper.get(), MPFR_RNDN);
        mpfr_mul_q(upper.get(), upper.get(), xq.get_mpq_t(), MPFR_RNDN);
        mpfr_pow_ui(upper.get(), upper.get(), static_cast<unsigned long>(2 * m), MPFR_RNDN);
        mpfr_mul(upper.get(), upper.get(), r.get(), MPFR_RNDN);
        const Rational poly_part = b.constant + b.upper_poly_part.evaluate(x);
        mpfr_add_q(upper.get(), upper.get(), poly_part.raw().get_mpq_t(), MPFR_RNDN);
        if (!(mpfr_cmp_q(f.get(), lower.raw().get_mpq_t()) > 0 && mpfr_less_p(f.get(), upper.get()))) ++failures;
      }
      CHECK_MESSAGE(failures == 0, "T" << theorem_number(t) << " m = " << m);
    }
  }
}

TEST_CASE("series coefficients are positive for 2 <= k <= 200") {
  for (SeriesId id : {SeriesId::Wilker5, SeriesId::Huygens6}) {
    bool ok = true;
    for (long k = 2; k <= 200; ++k) ok = ok && seq_coeff(id, k).sign() > 0;
    CHECK_MESSAGE(ok, to_string(id));
  }
}

TEST_CASE("remainders decrease strictly in n") {
  for (TargetId t : {TargetId::T5, TargetId::T6}) {
    const auto rows = remainder_table(t, 2, 20, 10);
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      CHECK(rows[i + 1].enclosure.hi() < rows[i].enclosure.lo());
      CHECK(rows[i + 1].enclosure.lo().sign() > 0);
    }
  }
}
