#include "trigbound/serialize.hpp"

#include <stdexcept>

namespace trigbound {

namespace {

std::string target_name(TargetId t) { return "T" + std::to_string(theorem_number(t)); }

TargetId target_from_json(const Json& j) {
  const std::string s = j.get<std::string>();
  if (s.size() == 2 && s[0] == 'T') {
    if (auto t = target_from_theorem(s[1] - '0')) return *t;
  }
  throw std::invalid_argument("unknown target '" + s + "'");
}

BigFloat float_from_string(const std::string& s, mpfr_prec_t prec) {
  BigFloat x(prec);
  if (s == "inf" || s == "-inf") {
    mpfr_set_inf(x.get(), s == "inf" ? 1 : -1);
    return x;
  }
  char* end = nullptr;
  mpfr_strtofr(x.get(), s.c_str(), &end, 0, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') throw std::invalid_argument("malformed float '" + s + "'");
  return x;
}

// Monomial x^{e} in LaTeX, empty for e = 0.
std::string monomial(int e) {
  if (e == 0) return "";
  if (e == 1) return "x";
  return "x^{" + std::to_string(e) + "}";
}

std::string wrapped_latex(const Rational& constant, const EvenPolynomial& p, Wrapper w) {
  switch (w) {
    case Wrapper::OverCosPlusConstant:
      return to_latex(constant) + " + \\left(" + to_latex(p) + "\\right)\\frac{1}{\\cos x}";
    case Wrapper::Plain:
      if (constant.is_zero()) return to_latex(p);
      [[fallthrough]];
    default:
      if (p.is_zero()) return to_latex(constant);
      {
        const std::string body = to_latex(p);
        return to_latex(constant) + (body.front() == '-' ? " - " + body.substr(1) : " + " + body);
      }
  }
}

}  // namespace

Json to_json(const Rational& q) { return q.to_string(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a JSON string");
  return Rational::parse(j.get<std::string>());
}

Json to_json(const EvenPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coeff", to_json(c)}});
  return {{"terms", terms}};
}

EvenPolynomial polynomial_from_json(const Json& j) {
  EvenPolynomial p;
  for (const auto& t : j.at("terms")) p.add_term(t.at("exp").get<int>(), rational_from_json(t.at("coeff")));
  return p;
}

Json to_json(const Enclosure& e) {
  return {{"lo", to_exact_string(e.lo())},
          {"hi", to_exact_string(e.hi())},
          {"precision", e.precision()},
          {"decimal", e.to_string(20)}};
}

Enclosure enclosure_from_json(const Json& j) {
  const auto prec = j.at("precision").get<mpfr_prec_t>();
  return Enclosure(float_from_string(j.at("lo").get<std::string>(), prec),
                   float_from_string(j.at("hi").get<std::string>(), prec));
}

Json to_json(const BoundPair& pair) {
  Json j;
  j["target"] = pair.target ? Json(target_name(*pair.target)) : Json(nullptr);
  j["order"] = pair.order;
  j["lower"] = to_json(pair.lower);
  j["upper"] = to_json(pair.upper);
  j["wrapper"] = std::string(to_string(pair.wrapper));
  j["constant"] = to_json(pair.constant);
  j["valid_on"] = pair.valid_on;
  return j;
}

BoundPair bound_pair_from_json(const Json& j) {
  BoundPair pair;
  if (!j.at("target").is_null()) pair.target = target_from_json(j.at("target"));
  pair.order = j.at("order").get<int>();
  pair.lower = polynomial_from_json(j.at("lower"));
  pair.upper = polynomial_from_json(j.at("upper"));
  const auto w = parse_wrapper(j.at("wrapper").get<std::string>());
  if (!w) throw std::invalid_argument("unknown wrapper");
  pair.wrapper = *w;
  pair.constant = rational_from_json(j.at("constant"));
  pair.valid_on = j.at("valid_on").get<std::string>();
  return pair;
}

Json to_json(const WdBound& b) {
  Json j;
  j["target"] = target_name(b.target);
  j["order"] = b.order;
  j["lower"] = to_json(b.lower);
  j["upper_poly_part"] = to_json(b.upper_poly_part);
  j["wrapper"] = std::string(to_string(Wrapper::WdCorrected));
  j["constant"] = to_json(b.constant);
  j["correction_exponent"] = b.correction_exponent;
  j["correction_coefficient"] = to_json(b.correction_coefficient);
  j["endpoint_value"] = std::string(to_string(b.endpoint_value));
  j["valid_on"] = b.valid_on;
  return j;
}

WdBound wd_bound_from_json(const Json& j) {
  WdBound b;
  b.target = target_from_json(j.at("target"));
  b.order = j.at("order").get<int>();
  b.lower = polynomial_from_json(j.at("lower"));
  b.upper_poly_part = polynomial_from_json(j.at("upper_poly_part"));
  b.constant = rational_from_json(j.at("constant"));
  b.correction_exponent = j.at("correction_exponent").get<int>();
  b.correction_coefficient = enclosure_from_json(j.at("correction_coefficient"));
  const std::string ev = j.at("endpoint_value").get<std::string>();
  if (ev == "PiSqOver4") {
    b.endpoint_value = EndpointValue::PiSqOver4;
  } else if (ev == "ThreePiOver2") {
    b.endpoint_value = EndpointValue::ThreePiOver2;
  } else {
    throw std::invalid_argument("unknown endpoint value '" + ev + "'");
  }
  b.valid_on = j.at("valid_on").get<std::string>();
  return b;
}

Json to_json(const HypothesisReport& r) {
  Json j;
  j["seq"] = r.seq;
  j["c_squared"] = to_json(r.c_squared);
  j["k_checked"] = r.k_checked;
  j["positivity_ok"] = r.positivity_ok;
  j["domination_ok"] = r.domination_ok;
  j["tail_trend"] = r.tail_trend;
  j["tail_flagged"] = r.tail_flagged;
  j["certified_range"] = {r.range_from, r.range_to};
  j["first_failing_k"] = r.first_failing_k ? Json(*r.first_failing_k) : Json(nullptr);
  return j;
}

Json to_json(const RemainderRow& row) { return {{"n", row.n}, {"r_max", row.r_max}}; }

Json to_json(const Certificate& c, bool with_timing) {
  Json j;
  j["claim"] = c.claim;
  j["description"] = c.description;
  j["interval"] = c.interval;
  j["status"] = std::string(to_string(c.status));
  j["subdivisions"] = c.subdivisions;
  j["min_gap"] = c.min_gap;
  j["near_zero_handling"] = c.near_zero_handling;
  j["endpoint_handling"] = c.endpoint_handling;
  j["counterexample"] = c.counterexample ? Json(*c.counterexample) : Json(nullptr);
  j["precision_bits"] = c.precision_bits;
  if (with_timing) j["wall_time_seconds"] = c.wall_time_seconds;
  return j;
}

std::string to_latex(const Rational& q) {
  const std::string sign = q.sign() < 0 ? "-" : "";
  const Rational a = q.abs();
  if (a.is_integer()) return sign + a.to_string();
  return sign + "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
}

std::string to_latex(const EvenPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = c.sign() < 0;
    const Rational a = c.abs();
    std::string term = (a == Rational(1) && e > 0) ? monomial(e) : to_latex(a) + monomial(e);
    if (out.empty()) {
      out = (neg ? "-" : "") + term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

std::string to_latex(const BoundPair& pair) {
  const std::string f = pair.target ? std::string(target_latex(*pair.target)) : "f(x)";
  return wrapped_latex(pair.constant, pair.lower, pair.wrapper) + " < " + f + " < " +
         wrapped_latex(pair.constant, pair.upper, pair.wrapper);
}

std::string to_latex(const WdBound& b) {
  const std::string endpoint = b.endpoint_value == EndpointValue::PiSqOver4 ? "\\frac{\\pi^{2}}{4}" : "\\frac{3\\pi}{2}";
  std::string correction = endpoint + " - " + to_latex(b.constant);
  if (!b.upper_poly_part.is_zero()) {
    correction += " - \\left.\\left(" + to_latex(b.upper_poly_part) + "\\right)\\right|_{x=\\pi/2}";
  }
  const std::string upper = wrapped_latex(b.constant, b.upper_poly_part, Wrapper::PlusConstant) +
                            " + \\left(\\frac{2x}{\\pi}\\right)^{" + std::to_string(b.correction_exponent) +
                            "}\\left(" + correction + "\\right)";
  return wrapped_latex(b.constant, b.lower, Wrapper::PlusConstant) + " < " + std::string(target_latex(b.target)) +
         " < " + upper;
}

}  // namespace trigbound
