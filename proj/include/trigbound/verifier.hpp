#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigbound/enclosure.hpp"
#include "trigbound/even_polynomial.hpp"
#include "trigbound/leibniz.hpp"
#include "trigbound/targets.hpp"
#include "trigbound/wd.hpp"

namespace trigbound {

enum class Status { Proved, Undecided, CounterexampleFound };

std::string_view to_string(Status s);
std::optional<Status> parse_status(std::string_view s);

/// Lower: the wrapped polynomial lies strictly below the target on (0, pi/2).
/// Upper: strictly above.
enum class Side { Lower, Upper };

std::string_view to_string(Side s);

/// One strict one-sided inequality between a wrapped polynomial and a target.
///   Plain, PlusConstant    constant + poly(x)
///   OverCosPlusConstant    constant + poly(x) / cos x     (T3 needs 3, T4 needs 2)
///   WdCorrected            constant + poly(x) + R (2x/pi)^{correction_exponent}
/// For WdCorrected, R must enclose f(pi/2) - constant - poly(pi/2); the
/// certificate relies on the bound meeting f exactly at pi/2.
struct Claim {
  std::string id;
  TargetId target = TargetId::T1;
  Side side = Side::Lower;
  Wrapper wrapper = Wrapper::Plain;
  Rational constant{0};
  EvenPolynomial poly;
  std::optional<Enclosure> correction;
  int correction_exponent = 0;

  /// Readable inequality, e.g. "-1/15*x^4 < cos(x) - (sin(x)/x)^3".
  std::string describe() const;
};

struct Certificate {
  std::string claim;
  std::string description;
  std::string interval = "(0,pi/2)";
  Status status = Status::Undecided;
  /// Number of certified leaves.
  long subdivisions = 0;
  /// Smallest certified lower bound of (difference)/x^{2K} over the leaves,
  /// where K is the order of the leading term of the difference at 0.
  std::string min_gap;
  std::string near_zero_handling;
  std::string endpoint_handling;
  std::optional<std::string> counterexample;
  int precision_bits = 0;
  double wall_time_seconds = 0.0;
  /// Numeric companion of min_gap, used only to aggregate certificates.
  double min_gap_value = 0.0;
};

struct CertifyOptions {
  /// Width of the leaf [0, epsilon] settled by the leading-term argument.
  Rational epsilon{1, 1000};
  long max_leaves = 100000;
  std::vector<mpfr_prec_t> precisions{64, 128, 256};
  unsigned jobs = 1;
  /// Also try cos/sin enclosures of the target when the series route is inconclusive.
  bool direct_route = true;
};

/// Claims making up a bound pair.
std::vector<Claim> claims_of(const BoundPair& pair);
std::vector<Claim> claims_of(const WdBound& bound);

/// The classical inequalities restated for statement = 1..6. Statements 5 and
/// 6 are one-sided. Throws std::invalid_argument outside 1..6.
std::vector<Claim> statement_claims(int statement);

/// Certifies one claim on (0, pi/2) by adaptive bisection of
/// [0, 15707963267948967/10^16].
Certificate certify_claim(const Claim& claim, const CertifyOptions& options = {});

/// Conjunction of several certificates under a common id.
Certificate combine(const std::string& id, const std::vector<Certificate>& parts);

Certificate certify_bound(const BoundPair& pair, const CertifyOptions& options = {});
Certificate certify_bound(const WdBound& bound, const CertifyOptions& options = {});
Certificate certify_statement(int statement, const CertifyOptions& options = {});

/// Enclosure of the wrapped bound at x, for plotting and sampling.
Enclosure evaluate_claim_bound(const Claim& claim, const Enclosure& x);

}  // namespace trigbound
