#include "trigbound/leibniz.hpp"

#include "trigbound/enclosure.hpp"

namespace trigbound {

namespace {

Rational decimal_fraction(const char* digits) { return Rational(BigInt(digits), BigInt("10000000000000000")); }

std::optional<TargetId> target_of(const CoeffSeq& seq) {
  if (!seq.id) return std::nullopt;
  switch (*seq.id) {
    case SeriesId::SeqA: return TargetId::T1;
    case SeriesId::SeqB: return TargetId::T2;
    case SeriesId::SeqC: return TargetId::T3;
    case SeriesId::SeqD: return TargetId::T4;
    default: return std::nullopt;
  }
}

}  // namespace

Rational half_pi_lower() { return decimal_fraction("15707963267948966"); }
Rational half_pi_upper() { return decimal_fraction("15707963267948967"); }
Rational quarter_pi_sq_lower() { return decimal_fraction("24674011002723396"); }
Rational quarter_pi_sq_upper() { return decimal_fraction("24674011002723397"); }

HypothesisReport check_hypothesis(const CoeffSeq& seq, const Rational& c_squared, long k_max) {
  if (c_squared.sign() <= 0) throw std::invalid_argument("c^2 must be positive");
  if (k_max < seq.start_k + 1) {
    throw std::invalid_argument("k_max must be at least start_k + 1");
  }
  HypothesisReport report;
  report.seq = seq.name;
  report.c_squared = c_squared;
  report.k_checked = k_max;
  report.range_from = seq.start_k;
  report.range_to = seq.start_k - 1;

  Rational current = seq.magnitude(seq.start_k);
  for (long k = seq.start_k; k <= k_max; ++k) {
    const Rational next = seq.magnitude(k + 1);
    const bool pos = current.sign() > 0;
    const bool dom = current > c_squared * next;
    if (!pos) report.positivity_ok = false;
    if (!dom) report.domination_ok = false;
    if (pos && dom && !report.first_failing_k) {
      report.range_to = k;
    } else if (!report.first_failing_k) {
      report.first_failing_k = k;
    }
    current = next;
  }

  const Rational first = rat_pow(c_squared, seq.start_k) * seq.magnitude(seq.start_k);
  const Rational last = rat_pow(c_squared, k_max) * seq.magnitude(k_max);
  report.tail_trend = to_decimal(last, 20);
  report.tail_flagged = !(last < first);
  return report;
}

std::string_view to_string(Wrapper w) {
  switch (w) {
    case Wrapper::Plain: return "Plain";
    case Wrapper::PlusConstant: return "PlusConstant";
    case Wrapper::OverCosPlusConstant: return "OverCosPlusConstant";
    case Wrapper::WdCorrected: return "WdCorrected";
  }
  return "";
}

std::optional<Wrapper> parse_wrapper(std::string_view s) {
  for (Wrapper w : {Wrapper::Plain, Wrapper::PlusConstant, Wrapper::OverCosPlusConstant, Wrapper::WdCorrected}) {
    if (to_string(w) == s) return w;
  }
  return std::nullopt;
}

BoundPair alternating_bounds(const CoeffSeq& seq, int n) {
  if (seq.sign_mode == SignMode::AllPositive) {
    throw std::invalid_argument(seq.name + " is not alternating");
  }
  if (n < 1 || 2L * n < seq.start_k) {
    throw std::invalid_argument("order " + std::to_string(n) + " gives an empty partial sum for " + seq.name);
  }
  const HypothesisReport report = check_hypothesis(seq, quarter_pi_sq_upper(), 2L * n + 2);
  if (!report.passed()) {
    const long k = report.first_failing_k.value_or(seq.start_k);
    throw HypothesisError(seq.name + ": hypothesis fails at k = " + std::to_string(k), k);
  }

  BoundPair pair;
  pair.target = target_of(seq);
  pair.order = n;
  EvenPolynomial even_sum = truncate(seq, 2L * n);
  EvenPolynomial odd_sum = truncate(seq, 2L * n + 1);
  if (seq.sign_mode == SignMode::AlternatingStartNeg) {
    pair.lower = std::move(even_sum);
    pair.upper = std::move(odd_sum);
  } else {
    pair.upper = std::move(even_sum);
    pair.lower = std::move(odd_sum);
  }
  if (pair.target == TargetId::T3) {
    pair.wrapper = Wrapper::OverCosPlusConstant;
    pair.constant = Rational(3);
  } else if (pair.target == TargetId::T4) {
    pair.wrapper = Wrapper::OverCosPlusConstant;
    pair.constant = Rational(2);
  }
  return pair;
}

BoundPair leibniz_bounds(TargetId target, int n) {
  switch (target) {
    case TargetId::T1:
    case TargetId::T2:
    case TargetId::T3:
    case TargetId::T4:
      return alternating_bounds(catalog_seq(sequence_for(target)), n);
    default:
      break;
  }
  throw std::invalid_argument("target T" + std::to_string(theorem_number(target)) +
                              " uses the endpoint-corrected construction");
}

Rational error_bound(const CoeffSeq& seq, long m, const Rational& c_squared_hi) {
  if (m < seq.start_k) throw std::invalid_argument("m must be at least start_k");
  return rat_pow(c_squared_hi, m + 1) * seq.magnitude(m + 1);
}

}  // namespace trigbound
