// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "trigbound/elementary.hpp"
#include "trigbound/leibniz.hpp"
#include "trigbound/positivity.hpp"
#include "trigbound/series_catalog.hpp"
#include "trigbound/verifier.hpp"
#include "trigbound/wd.hpp"

using namespace trigbound;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Rational to_rational(const mpq_class& q) { return Rational(q.get_num(), q.get_den()); }

BigFloat big(const oracle::Mp& v) {
  BigFloat b(mpfr_get_prec(v.get()));
  mpfr_set(b.get(), v.get(), MPFR_RNDN);
  return b;
}

std::string tname(TargetId t) { return "T" + std::to_string(theorem_number(t)); }

const std::vector<TargetId> kLeibniz{TargetId::T1, TargetId::T2, TargetId::T3, TargetId::T4};
const std::vector<TargetId> kWd{TargetId::T5, TargetId::T6};

Outcome golden_coefficients() {
  struct Row {
    SeriesId id;
    long first_k;
    std::vector<const char*> values;
  };
  const std::vector<Row> rows{
      {SeriesId::SeqA, 4, {"41/37800", "53/831600", "74677/27243216000", "989/10897286400", "79649/33345696384000",
                           "454007/8869955238144000"}},
      {SeriesId::SeqB, 4, {"1/181440", "1/14968800", "1/1868106240", "1/326918592000", "1/76218734592000",
                           "1/22808456326656000"}},
      {SeriesId::SeqC, 4, {"3/2240", "1/19800", "151/115315200", "101/4036032000", "7279/19760412672000",
                           "809/187723920384000"}},
      {SeriesId::SeqD, 4, {"19/4725", "37/133650", "283/20638800", "3503/6810804000", "189169/12504636144000",
                           "18917/52797352608000"}},
      {SeriesId::Wilker5, 2, {"2/45", "8/945", "2/1575", "16/93555"}},
      {SeriesId::Huygens6, 2, {"1/10", "1/210", "11/16800", "53/831600", "117911/18162144000"}},
  };
  Outcome o;
  long count = 0;
  for (const Row& r : rows) {
    for (std::size_t i = 0; i < r.values.size(); ++i) {
      const long k = r.first_k + static_cast<long>(i);
      const Rational got = seq_coeff(r.id, k);
      if (got != Rational::parse(r.values[i])) {
        o.fail(std::string(to_string(r.id)) + " k=" + std::to_string(k) + " gave " + got.to_string());
      }
      ++count;
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " coefficients exact";
  return o;
}

Outcome remainder_tables() {
  Outcome o;
  const std::vector<std::pair<TargetId, std::vector<double>>> tables{
      {TargetId::T5, {0.0696524, 0.0225863, 0.00694574, 0.00206173}},
      {TargetId::T6, {0.0320502, 0.00778176, 0.00195321, 0.000488251}},
  };
  for (const auto& [t, expected] : tables) {
    const auto rows = remainder_table(t, 3, 6, 6);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      const double got = std::stod(rows.at(i).r_max);
      if (std::abs(got - expected[i]) > 1e-4 * expected[i]) {
        o.fail(tname(t) + " n=" + std::to_string(i + 3) + " gave " + rows[i].r_max);
      }
    }
  }
  if (o.ok) o.detail = "8 values within 1e-4 relative";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (TargetId t : {TargetId::T1, TargetId::T2, TargetId::T3, TargetId::T4, TargetId::T5, TargetId::T6}) {
    const CoeffSeq seq = catalog_seq(sequence_for(t));
    const oracle::Series ref = oracle::derived_series(t, 30);
    for (long k = 0; k <= 15; ++k) {
      const Rational got = k < seq.start_k ? Rational(0) : seq.signed_coeff(k);
      const mpq_class& want = ref[static_cast<std::size_t>(2 * k)];
      if (got != Rational(want.get_num(), want.get_den())) o.fail(seq.name + " k=" + std::to_string(k));
    }
  }
  if (o.ok) o.detail = "6 sequences, k <= 15";
  return o;
}

Outcome hypothesis_suite() {
  Outcome o;
  for (SeriesId id : {SeriesId::SeqA, SeriesId::SeqB, SeriesId::SeqC, SeriesId::SeqD}) {
    const HypothesisReport r = check_hypothesis(catalog_seq(id), quarter_pi_sq_upper(), 1000);
    if (!r.passed() || r.range_to != 1000) o.fail(std::string(to_string(id)) + " fails");
  }
  if (o.ok) o.detail = "SeqA-SeqD, 2 <= k <= 1000, c^2 = " + quarter_pi_sq_upper().to_string();
  return o;
}

bool near_zero_engaged(const Certificate& c) { return c.near_zero_handling.find("leading term") != std::string::npos; }

Outcome certification_suite() {
  Outcome o;
  long certs = 0;
  long leaves = 0;
  const auto check = [&](const Certificate& c) {
    ++certs;
    leaves += c.subdivisions;
    if (c.status != Status::Proved) o.fail(c.claim + " " + std::string(to_string(c.status)));
    if (!near_zero_engaged(c)) o.fail(c.claim + " without the leading-term argument");
  };
  for (int s = 1; s <= 6; ++s) check(certify_statement(s));
  for (TargetId t : kLeibniz) {
    for (int n = 1; n <= 4; ++n) check(certify_bound(leibniz_bounds(t, n)));
  }
  for (TargetId t : kWd) {
    for (int m = wd_min_order(t); m <= 6; ++m) check(certify_bound(wd_bounds(t, m)));
  }
  if (o.ok) o.detail = std::to_string(certs) + " certificates Proved, " + std::to_string(leaves) + " leaves";
  return o;
}

Outcome bercu() {
  Outcome o;
  const Certificate c = bercu_check(7);
  if (c.status != Status::Proved) o.fail(std::string(to_string(c.status)));
  if (o.ok) o.detail = "m = 7 Proved on " + c.interval + ", " + std::to_string(c.subdivisions) + " leaves";
  return o;
}

// Property suites, 200 oracle points each.
Outcome properties() {
  Outcome o;
  constexpr mpfr_prec_t prec = 1200;
  const auto xs = oracle::samples(200, 1.5707963, 2024);
  const auto cmp = [&](const oracle::Mp& v, const Rational& q) { return mpfr_cmp_q(v.get(), q.raw().get_mpq_t()); };

  for (TargetId t : kLeibniz) {
    for (int n = 1; n <= 4; ++n) {
      const BoundPair b = leibniz_bounds(t, n);
      const BoundPair c = leibniz_bounds(t, n + 1);
      for (const auto& xq : xs) {
        const Rational x = to_rational(xq);
        const oracle::Mp core = oracle::core(t, xq, prec);
        if (!(cmp(core, b.lower.evaluate(x)) > 0 && cmp(core, b.upper.evaluate(x)) < 0)) {
          o.fail("sandwich " + tname(t) + " n=" + std::to_string(n));
        }
        if (!(b.lower.evaluate(x) <= c.lower.evaluate(x) && c.upper.evaluate(x) <= b.upper.evaluate(x))) {
          o.fail("nesting " + tname(t) + " n=" + std::to_string(n));
        }
      }
    }
    const CoeffSeq seq = catalog_seq(sequence_for(t));
    for (long m = 2; m <= 8; ++m) {
      const EvenPolynomial partial = truncate(seq, m);
      const Rational bound = error_bound(seq, m, quarter_pi_sq_upper());
      for (const auto& xq : xs) {
        oracle::Mp d = oracle::core(t, xq, prec);
        const oracle::Mp p = oracle::from_rational(partial.evaluate(to_rational(xq)).raw(), prec);
        mpfr_sub(d.get(), d.get(), p.get(), MPFR_RNDN);
        mpfr_abs(d.get(), d.get(), MPFR_RNDN);
        if (cmp(d, bound) > 0) o.fail("error bound " + tname(t) + " m=" + std::to_string(m));
      }
    }
  }
  for (TargetId t : kWd) {
    for (int m = wd_min_order(t); m <= 6; ++m) {
      const WdBound b = wd_bounds(t, m);
      const Claim upper = claims_of(b)[1];
      for (const auto& xq : xs) {
        const Rational x = to_rational(xq);
        const oracle::Mp f = oracle::target(t, xq, prec);
        if (cmp(f, b.constant + b.lower.evaluate(x)) <= 0) o.fail("sandwich " + tname(t) + " m=" + std::to_string(m));
        const Enclosure u = evaluate_claim_bound(upper, Enclosure::point(x, 256));
        if (!(big(f) < u.lo())) o.fail("sandwich " + tname(t) + " m=" + std::to_string(m));
      }
    }
  }

  const std::vector<Fn> fns{Fn::Sin,      Fn::Cos,      Fn::TargetT1, Fn::TargetT2,
                            Fn::TargetT3, Fn::TargetT4, Fn::TargetT5, Fn::TargetT6};
  for (Fn fn : fns) {
    for (const auto& xq : xs) {
      oracle::Mp ref(prec);
      switch (fn) {
        case Fn::Sin: ref = oracle::sin(xq, prec); break;
        case Fn::Cos: ref = oracle::cos(xq, prec); break;
        default: ref = oracle::target(static_cast<TargetId>(static_cast<int>(fn) - static_cast<int>(Fn::TargetT1)), xq, prec);
      }
      for (mpfr_prec_t p : {64, 256}) {
        if (!enclose(fn, Enclosure::point(to_rational(xq), p)).contains(big(ref))) {
          o.fail("containment " + std::string(to_string(fn)));
        }
      }
    }
  }

  CertifyOptions refined;
  refined.epsilon = Rational(1, 8192);
  refined.precisions = {128, 256};
  refined.direct_route = false;
  std::vector<Claim> claims;
  for (TargetId t : kLeibniz) {
    for (Claim& c : claims_of(leibniz_bounds(t, 2))) claims.push_back(std::move(c));
  }
  for (TargetId t : kWd) {
    for (Claim& c : claims_of(wd_bounds(t, 4))) claims.push_back(std::move(c));
  }
  for (const Claim& c : claims) {
    if (certify_claim(c).status != Status::Proved || certify_claim(c, refined).status != Status::Proved) {
      o.fail("refinement " + c.id);
    }
    for (const auto& xq : xs) {
      const Enclosure bound = evaluate_claim_bound(c, Enclosure::point(to_rational(xq), 256));
      const BigFloat f = big(oracle::target(c.target, xq, prec));
      const bool holds = c.side == Side::Lower ? bound.hi() < f : f < bound.lo();
      if (!holds) o.fail("refinement sample " + c.id);
    }
  }
  if (o.ok) o.detail = "sandwich, nesting, error bound, containment, refinement; 200 points each";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"golden-coefficients", 1.0, golden_coefficients},
      {"remainder-tables", 1.0, remainder_tables},
      {"oracle-equivalence", 60.0, oracle_equivalence},
      {"hypothesis-suite", 10.0, hypothesis_suite},
      {"certification-suite", 300.0, certification_suite},
      {"bercu", 60.0, bercu},
      {"property-tests", 600.0, properties},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) o.fail("over the " + std::to_string(c.budget_seconds) + " s budget");
    if (!o.ok) ++failures;
    std::printf("%s %-20s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
