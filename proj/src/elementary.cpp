#include "trigbound/elementary.hpp"

#include <stdexcept>

namespace trigbound {

namespace {

enum class Kind { Sin, Cos, Sinc };

Enclosure series_at(Kind kind, const BigFloat& p) {
  const mpfr_prec_t prec = p.precision();
  const Enclosure x = Enclosure::point(p);
  const Enclosure x2 = x.sqr();
  Enclosure term = kind == Kind::Sin ? x : Enclosure::point(Rational(1), prec);
  Enclosure sum = term;
  BigFloat threshold(prec);
  mpfr_set_ui_2exp(threshold.get(), 1, -(prec + 2), MPFR_RNDD);

  for (long k = 1; k < 400; ++k) {
    const long den = kind == Kind::Cos ? (2 * k - 1) * (2 * k) : (2 * k) * (2 * k + 1);
    term = term * x2 / Enclosure::point(Rational(den), prec);
    if (k >= 2 && term.hi() < threshold) {
      BigFloat lo(prec);
      mpfr_neg(lo.get(), term.hi().get(), MPFR_RNDD);
      return sum + Enclosure(lo, term.hi());
    }
    if (k % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  throw std::logic_error("series did not converge");
}

void check_domain(const Enclosure& x) {
  if (x.lo().sign() < 0 || !x.is_finite() || !(Enclosure::point(domain_max(), x.precision()).hi() >= x.hi())) {
    throw std::domain_error("argument " + x.to_string() + " outside [0, 1.5708]");
  }
}

Enclosure enclose_sin(const Enclosure& x) {
  const Enclosure a = series_at(Kind::Sin, x.lo());
  if (x.lo() == x.hi()) return a;
  const Enclosure b = series_at(Kind::Sin, x.hi());
  if (x.hi() <= Enclosure::half_pi(x.precision()).lo()) return Enclosure(a.lo(), b.hi());
  BigFloat one(x.precision());
  mpfr_set_ui(one.get(), 1, MPFR_RNDU);
  return Enclosure(a.lo() < b.lo() ? a.lo() : b.lo(), one);
}

// cos and sin(x)/x are decreasing on [0, pi].
Enclosure enclose_decreasing(Kind kind, const Enclosure& x) {
  const Enclosure a = series_at(kind, x.lo());
  if (x.lo() == x.hi()) return a;
  const Enclosure b = series_at(kind, x.hi());
  return Enclosure(b.lo(), a.hi());
}

Enclosure constant(long v, mpfr_prec_t prec) { return Enclosure::point(Rational(v), prec); }

}  // namespace

std::string_view to_string(Fn fn) {
  switch (fn) {
    case Fn::Sin: return "Sin";
    case Fn::Cos: return "Cos";
    case Fn::Sinc: return "Sinc";
    case Fn::SinCubedOverXCubed: return "SinCubedOverXCubed";
    case Fn::TargetT1: return "TargetT1";
    case Fn::TargetT2: return "TargetT2";
    case Fn::TargetT3: return "TargetT3";
    case Fn::TargetT4: return "TargetT4";
    case Fn::TargetT5: return "TargetT5";
    case Fn::TargetT6: return "TargetT6";
  }
  return "";
}

Fn target_fn(TargetId t) { return static_cast<Fn>(static_cast<int>(Fn::TargetT1) + static_cast<int>(t)); }

Rational domain_max() { return Rational(15708, 10000); }

Enclosure enclose(Fn fn, const Enclosure& x) {
  check_domain(x);
  switch (fn) {
    case Fn::Sin: return enclose_sin(x);
    case Fn::Cos: return enclose_decreasing(Kind::Cos, x);
    case Fn::Sinc: return enclose_decreasing(Kind::Sinc, x);
    case Fn::SinCubedOverXCubed: return enclose_decreasing(Kind::Sinc, x).pow(3);
    default: break;
  }
  return enclose_target(static_cast<TargetId>(static_cast<int>(fn) - static_cast<int>(Fn::TargetT1)), x);
}

Enclosure enclose_target(TargetId t, const Enclosure& x) {
  check_domain(x);
  const mpfr_prec_t p = x.precision();
  const Enclosure s = enclose_decreasing(Kind::Sinc, x);
  const Enclosure c = enclose_decreasing(Kind::Cos, x);
  switch (t) {
    case TargetId::T1: return c - s.pow(3);
    case TargetId::T2: return s - (c + constant(2, p)) / constant(3, p);
    case TargetId::T3: return constant(2, p) * s + s / c;
    case TargetId::T4: return s.sqr() + s / c;
    case TargetId::T5: return constant(1, p) / s.sqr() + c / s;
    case TargetId::T6: return constant(3, p) / s + c;
  }
  throw std::invalid_argument("unknown target");
}

Enclosure enclose_core(TargetId t, const Enclosure& x) {
  check_domain(x);
  const mpfr_prec_t p = x.precision();
  const Enclosure s = enclose_decreasing(Kind::Sinc, x);
  const Enclosure c = enclose_decreasing(Kind::Cos, x);
  switch (t) {
    case TargetId::T3: return constant(2, p) * s * c + s - constant(3, p) * c;
    case TargetId::T4: return s.sqr() * c + s - constant(2, p) * c;
    default: return enclose_target(t, x);
  }
}

}  // namespace trigbound
