#include "trigbound/wd.hpp"

#include <stdexcept>

#include "trigbound/series_catalog.hpp"

namespace trigbound {

namespace {

void require_wd_target(TargetId target) {
  if (target != TargetId::T5 && target != TargetId::T6) {
    throw std::invalid_argument("endpoint-corrected bounds exist only for T5 and T6");
  }
}

Rational wd_constant(TargetId target) { return target == TargetId::T5 ? Rational(2) : Rational(4); }

EvenPolynomial partial_sum(TargetId target, int n) {
  return truncate(catalog_seq(sequence_for(target)), n);
}

}  // namespace

std::string_view to_string(EndpointValue v) {
  return v == EndpointValue::PiSqOver4 ? "PiSqOver4" : "ThreePiOver2";
}

Enclosure WdBound::correction_x_coefficient() const {
  const mpfr_prec_t prec = correction_coefficient.precision();
  const Enclosure two_over_pi = Enclosure::point(Rational(1), prec) / Enclosure::half_pi(prec);
  return correction_coefficient * two_over_pi.pow(static_cast<unsigned>(correction_exponent));
}

int wd_min_order(TargetId target) {
  require_wd_target(target);
  return target == TargetId::T5 ? 2 : 3;
}

Enclosure endpoint_enclosure(TargetId target, mpfr_prec_t prec) {
  require_wd_target(target);
  const Enclosure h = Enclosure::half_pi(prec);
  if (target == TargetId::T5) return h.sqr();
  return Enclosure::point(Rational(3), prec) * h;
}

Enclosure remainder_at_half_pi(TargetId target, int n, mpfr_prec_t prec) {
  require_wd_target(target);
  const Enclosure h = Enclosure::half_pi(prec);
  return endpoint_enclosure(target, prec) - Enclosure::point(wd_constant(target), prec) -
         evaluate(partial_sum(target, n), h);
}

WdBound wd_bounds(TargetId target, int m, mpfr_prec_t prec) {
  const int floor = wd_min_order(target);
  if (m < floor) {
    throw std::invalid_argument("order " + std::to_string(m) + " below the minimum " + std::to_string(floor) +
                                " for T" + std::to_string(theorem_number(target)));
  }
  WdBound b;
  b.target = target;
  b.order = m;
  b.constant = wd_constant(target);
  b.lower = partial_sum(target, m);
  b.upper_poly_part = partial_sum(target, m - 1);
  b.correction_exponent = 2 * m;
  b.correction_coefficient = remainder_at_half_pi(target, m - 1, prec);
  b.endpoint_value = target == TargetId::T5 ? EndpointValue::PiSqOver4 : EndpointValue::ThreePiOver2;
  return b;
}

std::vector<RemainderRow> remainder_table(TargetId target, int n_from, int n_to, int digits) {
  require_wd_target(target);
  if (n_from < 2 || n_to > 20 || n_from > n_to) {
    throw std::invalid_argument("remainder range must satisfy 2 <= from <= to <= 20");
  }
  if (digits < 1 || digits > 50) throw std::invalid_argument("digits must lie in [1, 50]");

  std::vector<RemainderRow> rows;
  for (int n = n_from; n <= n_to; ++n) {
    for (mpfr_prec_t prec = 64 + 4 * digits;; prec *= 2) {
      Enclosure r = remainder_at_half_pi(target, n, prec);
      const std::string lo = to_decimal(r.lo(), digits);
      const std::string hi = to_decimal(r.hi(), digits);
      // The stored pi limits useful precision to about 330 bits.
      if (lo == hi || prec > 1024) {
        rows.push_back({n, lo, std::move(r)});
        break;
      }
    }
  }
  return rows;
}

}  // namespace trigbound
