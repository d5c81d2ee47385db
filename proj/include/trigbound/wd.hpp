#pragma once

#include <string>
#include <vector>

#include "trigbound/enclosure.hpp"
#include "trigbound/even_polynomial.hpp"
#include "trigbound/targets.hpp"

namespace trigbound {

/// Symbolic value of the target at pi/2.
enum class EndpointValue { PiSqOver4, ThreePiOver2 };

std::string_view to_string(EndpointValue v);

/// Bounds of order m for T5 and T6:
///   constant + lower(x) < f(x) < constant + upper_poly_part(x) + R (2x/pi)^{2m}
/// where R = f(pi/2) - constant - upper_poly_part(pi/2) is enclosed in
/// correction_coefficient.
struct WdBound {
  TargetId target = TargetId::T5;
  int order = 0;
  Rational constant{0};
  EvenPolynomial lower;
  EvenPolynomial upper_poly_part;
  int correction_exponent = 0;
  Enclosure correction_coefficient;
  EndpointValue endpoint_value = EndpointValue::PiSqOver4;
  std::string valid_on = "(0,pi/2)";

  /// R (2/pi)^{2m}: the x^{2m} coefficient of the upper bound.
  Enclosure correction_x_coefficient() const;
};

/// Minimum admissible order: 2 for T5, 3 for T6.
int wd_min_order(TargetId target);

/// Throws std::invalid_argument for targets other than T5/T6 and for m below
/// wd_min_order. prec is the working precision of the correction enclosure.
WdBound wd_bounds(TargetId target, int m, mpfr_prec_t prec = 256);

/// f(pi/2) for T5 or T6.
Enclosure endpoint_enclosure(TargetId target, mpfr_prec_t prec);

/// R_n(pi/2) = f(pi/2) - constant - sum_{k <= n} c_k (pi/2)^{2k}.
Enclosure remainder_at_half_pi(TargetId target, int n, mpfr_prec_t prec);

struct RemainderRow {
  int n = 0;
  std::string r_max;
  Enclosure enclosure;
};

/// Rows n_from..n_to with r_max rounded to `digits` significant digits.
/// Requires 2 <= n_from <= n_to <= 20 and 1 <= digits <= 50.
std::vector<RemainderRow> remainder_table(TargetId target, int n_from, int n_to, int digits);

}  // namespace trigbound
