#pragma once

#include <string_view>

#include "trigbound/enclosure.hpp"
#include "trigbound/targets.hpp"

namespace trigbound {

enum class Fn {
  Sin,
  Cos,
  Sinc,
  SinCubedOverXCubed,
  TargetT1,
  TargetT2,
  TargetT3,
  TargetT4,
  TargetT5,
  TargetT6,
};

std::string_view to_string(Fn fn);
Fn target_fn(TargetId t);

/// Largest admissible argument.
Rational domain_max();

/// Range enclosure of fn over x. Requires x inside [0, domain_max()];
/// throws std::domain_error otherwise. Point values come from the Taylor
/// series at the working precision of x, with the first omitted term as the
/// tail bound. Interval arguments use monotonicity of sin, cos and sin(x)/x.
/// Targets with tan x return the whole line when cos x may vanish on x.
Enclosure enclose(Fn fn, const Enclosure& x);

/// The target expression itself.
Enclosure enclose_target(TargetId t, const Enclosure& x);

/// The expression a certificate compares polynomials against:
///   T1, T2, T5, T6   the target f
///   T3               cos x * (f - 3) = 2 sin x cos x / x + sin x / x - 3 cos x
///   T4               cos x * (f - 2) = (sin x / x)^2 cos x + sin x / x - 2 cos x
Enclosure enclose_core(TargetId t, const Enclosure& x);

}  // namespace trigbound
