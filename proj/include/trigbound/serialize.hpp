#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "trigbound/even_polynomial.hpp"
#include "trigbound/leibniz.hpp"
#include "trigbound/rational.hpp"
#include "trigbound/verifier.hpp"
#include "trigbound/wd.hpp"

namespace trigbound {

using Json = nlohmann::ordered_json;

/// Rationals travel as "num/den" strings, never as floating point.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"terms": [{"exp": 4, "coeff": "-1/15"}, ...]} sorted by exponent.
Json to_json(const EvenPolynomial& p);
EvenPolynomial polynomial_from_json(const Json& j);

/// Endpoints as exact hexadecimal strings plus the precision in bits.
Json to_json(const Enclosure& e);
Enclosure enclosure_from_json(const Json& j);

Json to_json(const BoundPair& pair);
BoundPair bound_pair_from_json(const Json& j);

Json to_json(const WdBound& bound);
WdBound wd_bound_from_json(const Json& j);

Json to_json(const HypothesisReport& report);
Json to_json(const RemainderRow& row);
/// wall_time_seconds is included only when with_timing is set.
Json to_json(const Certificate& cert, bool with_timing = false);

/// \frac{num}{den}x^{2k} terms joined with signs.
std::string to_latex(const Rational& q);
std::string to_latex(const EvenPolynomial& p);
/// Double inequality lower < target < upper.
std::string to_latex(const BoundPair& pair);
std::string to_latex(const WdBound& bound);

}  // namespace trigbound
