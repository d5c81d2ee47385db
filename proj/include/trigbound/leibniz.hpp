#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "trigbound/even_polynomial.hpp"
#include "trigbound/rational.hpp"
#include "trigbound/series_catalog.hpp"
#include "trigbound/targets.hpp"

namespace trigbound {

/// Rational brackets of pi/2 and pi^2/4 used wherever pi enters an exact check.
Rational half_pi_lower();
Rational half_pi_upper();
Rational quarter_pi_sq_lower();
Rational quarter_pi_sq_upper();

/// Outcome of checking the alternating-series hypotheses on a finite range.
/// Nothing here is a statement about all k.
struct HypothesisReport {
  std::string seq;
  Rational c_squared;
  long k_checked = 0;
  bool positivity_ok = true;
  bool domination_ok = true;
  /// Decimal value of c^{2K} A(K) at K = k_checked. Informational only.
  std::string tail_trend;
  /// Set when c^{2K} A(K) has not decreased below its value at start_k.
  bool tail_flagged = false;
  /// Largest prefix [from, to] on which both checks held.
  long range_from = 0;
  long range_to = 0;
  std::optional<long> first_failing_k;

  bool passed() const { return positivity_ok && domination_ok; }
};

/// Exact check of A(k) > 0 and A(k) > c^2 A(k+1) for start_k <= k <= k_max.
HypothesisReport check_hypothesis(const CoeffSeq& seq, const Rational& c_squared, long k_max);

enum class Wrapper { Plain, PlusConstant, OverCosPlusConstant, WdCorrected };

std::string_view to_string(Wrapper w);
std::optional<Wrapper> parse_wrapper(std::string_view s);

/// Polynomial sandwich of a target.
///   Plain                 lower(x) < f(x) < upper(x)
///   PlusConstant          c + lower(x) < f(x) < c + upper(x)
///   OverCosPlusConstant   c + lower(x)/cos x < f(x) < c + upper(x)/cos x
struct BoundPair {
  std::optional<TargetId> target;
  int order = 0;
  EvenPolynomial lower;
  EvenPolynomial upper;
  Wrapper wrapper = Wrapper::Plain;
  Rational constant{0};
  std::string valid_on = "(0,pi/2)";

  friend bool operator==(const BoundPair&, const BoundPair&) = default;
};

/// Raised when the hypotheses fail on the range a bound needs.
class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(const std::string& what, long k) : std::runtime_error(what), failing_k_(k) {}
  long failing_k() const { return failing_k_; }

 private:
  long failing_k_;
};

/// Leibniz sandwich of order n: partial sums through k = 2n and 2n + 1.
/// The hypotheses are checked exactly up to k = 2n + 2 with c^2 = quarter_pi_sq_upper().
BoundPair alternating_bounds(const CoeffSeq& seq, int n);

/// Leibniz bounds for targets T1..T4 of order n >= 1.
BoundPair leibniz_bounds(TargetId target, int n);

/// c_squared_hi^{m+1} A(m+1): uniform bound on |f - partial_m| over (0, c).
Rational error_bound(const CoeffSeq& seq, long m, const Rational& c_squared_hi);

}  // namespace trigbound
