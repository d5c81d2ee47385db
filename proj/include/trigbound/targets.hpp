#pragma once

#include <optional>
#include <string_view>

namespace trigbound {

/// The six target expressions on (0, pi/2). The command line selects Tn by
/// number n.
///   T1  cos x - (sin x / x)^3
///   T2  sin x / x - (cos x + 2) / 3
///   T3  2 sin x / x + tan x / x
///   T4  (sin x / x)^2 + tan x / x
///   T5  (x / sin x)^2 + x / tan x
///   T6  3 x / sin x + cos x
enum class TargetId { T1, T2, T3, T4, T5, T6 };

int theorem_number(TargetId t);
/// Inverse of theorem_number; empty for numbers outside 1..6.
std::optional<TargetId> target_from_theorem(int theorem);

/// Plain-text formula of the target expression.
std::string_view target_formula(TargetId t);
/// LaTeX formula of the target expression.
std::string_view target_latex(TargetId t);

}  // namespace trigbound
