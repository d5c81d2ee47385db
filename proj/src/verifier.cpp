#include "trigbound/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <stdexcept>

#include "trigbound/elementary.hpp"
#include "trigbound/series_catalog.hpp"

namespace trigbound {

namespace {

constexpr int kMinSeriesTerms = 30;
constexpr long kDerivativeBudget = 4096;

// |c_k| <= alpha k^power base^k / ((2k)!)^factorial for all k past the truncation.
struct Majorant {
  Rational alpha;
  int power;
  Rational base;
  int factorial;
};

Majorant majorant_for(TargetId t) {
  const Rational sigma(507, 5000);  // >= 1/pi^2
  switch (t) {
    case TargetId::T1: return {Rational(8), 0, Rational(9), 1};
    case TargetId::T2: return {Rational(1, 3), 0, Rational(1), 1};
    case TargetId::T3: return {Rational(2), 0, Rational(4), 1};
    case TargetId::T4: return {Rational(9, 4), 0, Rational(9), 1};
    case TargetId::T5: return {Rational(33, 5), 1, sigma, 0};
    case TargetId::T6: return {Rational(11), 0, sigma, 0};
  }
  throw std::invalid_argument("unknown target");
}

Rational majorant_value(const Majorant& m, long k, int extra_power) {
  Rational v = m.alpha * rat_pow(Rational(k), m.power + extra_power) * rat_pow(m.base, k);
  if (m.factorial) v /= Rational(factorial(static_cast<unsigned long>(2 * k)));
  return v;
}

// Upper bound of M(k+1)/M(k) over k >= from.
Rational majorant_ratio(const Majorant& m, long from, int extra_power) {
  Rational r = m.base * rat_pow(Rational(from + 1, from), m.power + extra_power);
  if (m.factorial) r /= Rational((2 * from + 1) * (2 * from + 2));
  return r;
}

Rational core_constant(TargetId t) {
  if (t == TargetId::T5) return Rational(2);
  if (t == TargetId::T6) return Rational(4);
  return Rational(0);
}

// Difference D = s (core - P) = x^{2K} q(x), q(x) = sum_j d_{K+j} x^{2j} + tail.
struct Plan {
  TargetId target = TargetId::T1;
  int sign = 1;
  int K = 0;
  int N = 0;
  std::vector<Rational> exact;
  EvenPolynomial p_core;
  std::optional<Enclosure> correction;
  int corr_exponent = 0;
  Majorant majorant;
  bool endpoint_touch = false;
};

struct Prepared {
  mpfr_prec_t prec = 64;
  std::vector<Enclosure> q;
  std::vector<Enclosure> dq;
  Enclosure tail_coeff;
  Enclosure tail_ratio;
  Enclosure dtail_coeff;
  Enclosure dtail_ratio;
  std::optional<Enclosure> kappa;
};

EvenPolynomial core_polynomial(const Claim& c) {
  const bool cos_target = c.target == TargetId::T3 || c.target == TargetId::T4;
  if (cos_target != (c.wrapper == Wrapper::OverCosPlusConstant)) {
    throw std::invalid_argument("T3 and T4 claims, and only those, use the OverCosPlusConstant wrapper");
  }
  if (cos_target) {
    const Rational need = c.target == TargetId::T3 ? Rational(3) : Rational(2);
    if (c.constant != need) {
      throw std::invalid_argument("constant " + c.constant.to_string() + " does not match the target's value at 0");
    }
    return c.poly;
  }
  if (c.wrapper == Wrapper::WdCorrected) {
    if (!c.correction || c.correction_exponent <= 0 || c.correction_exponent % 2 != 0) {
      throw std::invalid_argument("corrected claim needs a coefficient and a positive even exponent");
    }
    if (c.target != TargetId::T5 && c.target != TargetId::T6) {
      throw std::invalid_argument("corrected claims are defined for T5 and T6 only");
    }
  }
  EvenPolynomial p = c.poly;
  EvenPolynomial k;
  k.add_term(0, c.constant);
  return p + k;
}

Enclosure correction_x_coefficient(const Enclosure& r, int exponent, mpfr_prec_t prec) {
  const Enclosure two_over_pi = Enclosure::point(Rational(1), prec) / Enclosure::half_pi(prec);
  return r.with_precision(prec) * two_over_pi.pow(static_cast<unsigned>(exponent));
}

// The claim's coefficient intersected with f(pi/2) - constant - poly(pi/2).
Enclosure endpoint_correction(const Claim& c) {
  const mpfr_prec_t prec = std::max<mpfr_prec_t>(c.correction->precision(), 256);
  const Enclosure own = endpoint_enclosure(c.target, prec) - Enclosure::point(c.constant, prec) -
                        evaluate(c.poly, Enclosure::half_pi(prec));
  auto both = intersect(c.correction->with_precision(prec), own);
  if (!both) {
    throw std::invalid_argument("correction coefficient " + c.correction->to_string() +
                                " excludes the endpoint value " + own.to_string());
  }
  return *both;
}

Plan make_plan(const Claim& c) {
  Plan plan;
  plan.target = c.target;
  plan.sign = c.side == Side::Lower ? 1 : -1;
  plan.p_core = core_polynomial(c);
  if (c.wrapper == Wrapper::WdCorrected) {
    plan.correction = endpoint_correction(c);
    plan.corr_exponent = c.correction_exponent;
  }
  plan.majorant = majorant_for(c.target);
  plan.N = std::max({kMinSeriesTerms, plan.p_core.degree() / 2 + 4, plan.corr_exponent / 2 + 4});

  const CoeffSeq seq = catalog_seq(sequence_for(c.target));
  plan.exact.assign(static_cast<std::size_t>(plan.N) + 1, Rational(0));
  for (int k = 0; k <= plan.N; ++k) {
    Rational core = k == 0 ? core_constant(c.target) : (k < seq.start_k ? Rational(0) : seq.signed_coeff(k));
    plan.exact[static_cast<std::size_t>(k)] = Rational(plan.sign) * (core - plan.p_core.coeff(2 * k));
  }
  plan.K = -1;
  for (int k = 0; k <= plan.N; ++k) {
    const bool corr_here = plan.correction && 2 * k == plan.corr_exponent;
    if (!plan.exact[static_cast<std::size_t>(k)].is_zero() || corr_here) {
      plan.K = k;
      break;
    }
  }
  if (plan.K < 0) throw std::invalid_argument("claim polynomial agrees with the target series beyond the truncation");
  plan.endpoint_touch = plan.correction.has_value() && c.side == Side::Upper;
  return plan;
}

Prepared prepare(const Plan& plan, mpfr_prec_t prec) {
  Prepared pr;
  pr.prec = prec;
  if (plan.correction) pr.kappa = correction_x_coefficient(*plan.correction, plan.corr_exponent, prec);
  for (int k = plan.K; k <= plan.N; ++k) {
    Enclosure d = Enclosure::point(plan.exact[static_cast<std::size_t>(k)], prec);
    if (pr.kappa && 2 * k == plan.corr_exponent) {
      d -= Enclosure::point(Rational(plan.sign), prec) * *pr.kappa;
    }
    const int j = k - plan.K;
    if (j > 0) pr.dq.push_back(Enclosure::point(Rational(2 * j), prec) * d);
    pr.q.push_back(std::move(d));
  }
  const long first = plan.N + 1;
  pr.tail_coeff = Enclosure::point(majorant_value(plan.majorant, first, 0), prec);
  pr.tail_ratio = Enclosure::point(majorant_ratio(plan.majorant, first, 0), prec);
  pr.dtail_coeff = Enclosure::point(Rational(2) * majorant_value(plan.majorant, first, 1), prec);
  pr.dtail_ratio = Enclosure::point(majorant_ratio(plan.majorant, first, 1), prec);
  return pr;
}

Enclosure symmetric(const BigFloat& r) {
  BigFloat lo(r.precision());
  mpfr_neg(lo.get(), r.get(), MPFR_RNDD);
  return Enclosure(lo, r);
}

// sum_{k > N} coeff-like terms, geometric with ratio ratio * b^2, starting at coeff * b^{2 power}.
Enclosure tail_enclosure(const Enclosure& coeff, const Enclosure& ratio, const Enclosure& b2, int power) {
  const mpfr_prec_t prec = coeff.precision();
  const Enclosure theta = ratio * b2;
  if (mpfr_cmp_ui(theta.hi().get(), 1) >= 0) return Enclosure::entire(prec);
  const Enclosure t = coeff * b2.pow(static_cast<unsigned>(power)) / (Enclosure::point(Rational(1), prec) - theta);
  return symmetric(t.hi());
}

Enclosure horner(const std::vector<Enclosure>& coeffs, const Enclosure& x2, mpfr_prec_t prec) {
  Enclosure acc = Enclosure::point(Rational(0), prec);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x2 + *it;
  return acc;
}

Enclosure series_q(const Plan& plan, const Prepared& pr, const Rational& a, const Rational& b) {
  const Enclosure x = Enclosure::between(a, b, pr.prec);
  const Enclosure bb = Enclosure::point(b, pr.prec);
  const Enclosure b2 = bb.sqr();
  return horner(pr.q, x.sqr(), pr.prec) + tail_enclosure(pr.tail_coeff, pr.tail_ratio, b2, plan.N + 1 - plan.K);
}

Enclosure series_dq(const Plan& plan, const Prepared& pr, const Rational& a, const Rational& b) {
  const Enclosure x = Enclosure::between(a, b, pr.prec);
  const Enclosure bb = Enclosure::point(b, pr.prec);
  const Enclosure b2 = bb.sqr();
  const Enclosure tail = tail_enclosure(pr.dtail_coeff, pr.dtail_ratio, b2, plan.N + 1 - plan.K);
  if (!tail.is_finite()) return tail;
  const Enclosure scaled_tail = symmetric((tail / Enclosure::point(a, pr.prec)).hi());
  return x * horner(pr.dq, x.sqr(), pr.prec) + scaled_tail;
}

Enclosure direct_difference(const Plan& plan, const Prepared& pr, const Rational& a, const Rational& b) {
  const Enclosure x = Enclosure::between(a, b, pr.prec);
  Enclosure p = evaluate(plan.p_core, x);
  if (pr.kappa) p += *pr.kappa * x.pow(static_cast<unsigned>(plan.corr_exponent));
  Enclosure d = enclose_core(plan.target, x) - p;
  return plan.sign > 0 ? d : -d;
}

enum class Sign { Positive, Negative, Unknown };

struct LeafOutcome {
  Sign sign = Sign::Unknown;
  BigFloat gap;
  mpfr_prec_t prec = 0;
};

struct Leaf {
  Rational a;
  Rational b;
};

bool wide(const Rational& a, const Rational& b) { return b - a > Rational(1, 1L << 24); }

LeafOutcome evaluate_leaf(const Plan& plan, const std::vector<Prepared>& ladder, const Leaf& leaf, bool direct) {
  LeafOutcome out;
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (i > 0 && wide(leaf.a, leaf.b)) break;
    const Prepared& pr = ladder[i];
    out.prec = pr.prec;
    const Enclosure q = series_q(plan, pr, leaf.a, leaf.b);
    if (q.positive()) {
      out.sign = Sign::Positive;
      out.gap = q.lo();
      return out;
    }
    if (q.negative()) {
      out.sign = Sign::Negative;
      return out;
    }
    if (direct && leaf.a.sign() > 0) {
      const Enclosure d = direct_difference(plan, pr, leaf.a, leaf.b);
      if (d.positive()) {
        out.sign = Sign::Positive;
        const Enclosure scale = Enclosure::point(leaf.b, pr.prec).pow(static_cast<unsigned>(2 * plan.K));
        out.gap = (Enclosure::point(d.lo()) / scale).lo();
        return out;
      }
      if (d.negative()) {
        out.sign = Sign::Negative;
        return out;
      }
    }
  }
  out.sign = Sign::Unknown;
  return out;
}

template <typename Fn>
std::vector<LeafOutcome> evaluate_all(const std::vector<Leaf>& leaves, unsigned jobs, Fn fn) {
  std::vector<LeafOutcome> out(leaves.size());
  if (jobs <= 1 || leaves.size() < 2 * static_cast<std::size_t>(jobs)) {
    for (std::size_t i = 0; i < leaves.size(); ++i) out[i] = fn(leaves[i]);
    return out;
  }
  const std::size_t chunk = (leaves.size() + jobs - 1) / jobs;
  std::vector<std::future<void>> tasks;
  for (std::size_t start = 0; start < leaves.size(); start += chunk) {
    const std::size_t stop = std::min(leaves.size(), start + chunk);
    tasks.push_back(std::async(std::launch::async, [&, start, stop] {
      for (std::size_t i = start; i < stop; ++i) out[i] = fn(leaves[i]);
    }));
  }
  for (auto& t : tasks) t.get();
  return out;
}

// q' < 0 on [from, to] by bisection.
bool certify_decreasing(const Plan& plan, const std::vector<Prepared>& ladder, const Rational& from,
                        const Rational& to, unsigned jobs) {
  std::vector<Leaf> pending{{from, to}};
  long used = 0;
  while (!pending.empty()) {
    used += static_cast<long>(pending.size());
    if (used > kDerivativeBudget) return false;
    const auto outcomes = evaluate_all(pending, jobs, [&](const Leaf& leaf) {
      LeafOutcome o;
      for (std::size_t i = 0; i < ladder.size(); ++i) {
        if (i > 0 && wide(leaf.a, leaf.b)) break;
        const Enclosure dq = series_dq(plan, ladder[i], leaf.a, leaf.b);
        if (dq.negative()) {
          o.sign = Sign::Negative;
          break;
        }
        if (dq.positive()) {
          o.sign = Sign::Positive;
          break;
        }
      }
      return o;
    });
    std::vector<Leaf> next;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (outcomes[i].sign == Sign::Positive) return false;
      if (outcomes[i].sign == Sign::Unknown) {
        const Rational mid = (pending[i].a + pending[i].b) / Rational(2);
        next.push_back({pending[i].a, mid});
        next.push_back({mid, pending[i].b});
      }
    }
    pending = std::move(next);
  }
  return true;
}

std::string leading_text(const Plan& plan) {
  const std::string power = "x^" + std::to_string(2 * plan.K);
  if (plan.correction && 2 * plan.K == plan.corr_exponent) {
    Prepared pr = prepare(plan, 256);
    return "leading term " + pr.q.front().to_string(8) + "*" + power;
  }
  return "leading term " + plan.exact[static_cast<std::size_t>(plan.K)].to_string() + "*" + power;
}

std::string side_text(const Claim& c) {
  const std::string k = c.constant.to_string();
  switch (c.wrapper) {
    case Wrapper::Plain:
      return c.constant.is_zero() ? c.poly.to_string() : k + " + " + c.poly.to_string();
    case Wrapper::PlusConstant:
      return k + " + " + c.poly.to_string();
    case Wrapper::OverCosPlusConstant:
      return k + " + (" + c.poly.to_string() + ")/cos(x)";
    case Wrapper::WdCorrected: {
      std::string s = k;
      if (!c.poly.is_zero()) s += " + " + c.poly.to_string();
      const std::string r = c.correction ? to_decimal(c.correction->mid(), 12) : "?";
      return s + " + " + r + "*(2*x/pi)^" + std::to_string(c.correction_exponent);
    }
  }
  return "";
}

std::string target_prefix(TargetId t) { return "T" + std::to_string(theorem_number(t)); }

Claim make_claim(std::string id, TargetId t, Side side, Wrapper w, const Rational& constant, EvenPolynomial poly) {
  Claim c;
  c.id = std::move(id);
  c.target = t;
  c.side = side;
  c.wrapper = w;
  c.constant = constant;
  c.poly = std::move(poly);
  return c;
}

EvenPolynomial poly_of(std::initializer_list<std::pair<int, Rational>> terms) {
  EvenPolynomial p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Proved: return "Proved";
    case Status::Undecided: return "Undecided";
    case Status::CounterexampleFound: return "CounterexampleFound";
  }
  return "";
}

std::optional<Status> parse_status(std::string_view s) {
  for (Status st : {Status::Proved, Status::Undecided, Status::CounterexampleFound}) {
    if (to_string(st) == s) return st;
  }
  return std::nullopt;
}

std::string_view to_string(Side s) { return s == Side::Lower ? "lower" : "upper"; }

std::string Claim::describe() const {
  const std::string f(target_formula(target));
  return side == Side::Lower ? side_text(*this) + " < " + f : f + " < " + side_text(*this);
}

std::vector<Claim> claims_of(const BoundPair& pair) {
  if (!pair.target) throw std::invalid_argument("bound pair has no target");
  const std::string base = target_prefix(*pair.target) + "-n" + std::to_string(pair.order);
  return {make_claim(base + "-lower", *pair.target, Side::Lower, pair.wrapper, pair.constant, pair.lower),
          make_claim(base + "-upper", *pair.target, Side::Upper, pair.wrapper, pair.constant, pair.upper)};
}

std::vector<Claim> claims_of(const WdBound& bound) {
  const std::string base = target_prefix(bound.target) + "-m" + std::to_string(bound.order);
  Claim lower = make_claim(base + "-lower", bound.target, Side::Lower, Wrapper::PlusConstant, bound.constant,
                           bound.lower);
  Claim upper = make_claim(base + "-upper", bound.target, Side::Upper, Wrapper::WdCorrected, bound.constant,
                           bound.upper_poly_part);
  upper.correction = bound.correction_coefficient;
  upper.correction_exponent = bound.correction_exponent;
  return {lower, upper};
}

std::vector<Claim> statement_claims(int statement) {
  const std::string id = "statement-" + std::to_string(statement);
  switch (statement) {
    case 1:
      return {make_claim(id + "-lower", TargetId::T1, Side::Lower, Wrapper::Plain, 0, poly_of({{4, Rational(-1, 15)}})),
              make_claim(id + "-upper", TargetId::T1, Side::Upper, Wrapper::Plain, 0,
                         poly_of({{4, Rational(-1, 15)}, {6, Rational(23, 1890)}}))};
    case 2:
      return {make_claim(id + "-lower", TargetId::T2, Side::Lower, Wrapper::Plain, 0, poly_of({{4, Rational(-1, 180)}})),
              make_claim(id + "-upper", TargetId::T2, Side::Upper, Wrapper::Plain, 0,
                         poly_of({{4, Rational(-1, 180)}, {6, Rational(1, 3780)}}))};
    case 3:
      return {make_claim(id + "-lower", TargetId::T3, Side::Lower, Wrapper::OverCosPlusConstant, 3,
                         poly_of({{4, Rational(3, 20)}, {6, Rational(-3, 140)}})),
              make_claim(id + "-upper", TargetId::T3, Side::Upper, Wrapper::OverCosPlusConstant, 3,
                         poly_of({{4, Rational(3, 20)}}))};
    case 4:
      return {make_claim(id + "-lower", TargetId::T4, Side::Lower, Wrapper::OverCosPlusConstant, 2,
                         poly_of({{4, Rational(8, 45)}, {6, Rational(-8, 105)}})),
              make_claim(id + "-upper", TargetId::T4, Side::Upper, Wrapper::OverCosPlusConstant, 2,
                         poly_of({{4, Rational(8, 45)}}))};
    case 5:
      return {make_claim(id + "-lower", TargetId::T5, Side::Lower, Wrapper::PlusConstant, 2,
                         poly_of({{4, Rational(2, 45)}}))};
    case 6:
      return {make_claim(id + "-lower", TargetId::T6, Side::Lower, Wrapper::PlusConstant, 4,
                         poly_of({{4, Rational(1, 10)}, {6, Rational(1, 210)}}))};
    default:
      break;
  }
  throw std::invalid_argument("statement must lie in 1..6");
}

Certificate certify_claim(const Claim& claim, const CertifyOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  if (options.epsilon.sign() <= 0 || options.epsilon >= Rational(1)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  if (options.precisions.empty()) throw std::invalid_argument("precision ladder is empty");
  if (options.max_leaves < 2) throw std::invalid_argument("leaf budget must be at least 2");

  const Plan plan = make_plan(claim);
  std::vector<Prepared> ladder;
  for (mpfr_prec_t p : options.precisions) ladder.push_back(prepare(plan, p));

  Certificate cert;
  cert.claim = claim.id;
  cert.description = claim.describe();
  cert.near_zero_handling = "difference factored as x^" + std::to_string(2 * plan.K) + "*q(x), " +
                            leading_text(plan) + "; q enclosed on [0, " + options.epsilon.to_string() +
                            "] by its series with a majorant tail";

  const auto finish = [&](Certificate& c) -> Certificate {
    c.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return c;
  };

  const Rational right_end = half_pi_upper();
  Rational right = right_end;
  if (plan.endpoint_touch) {
    bool ok = false;
    for (int i = 3; i <= 10 && !ok; ++i) {
      const Rational r = half_pi_lower() - right_end / Rational(1L << i);
      if (r <= options.epsilon) break;
      ok = certify_decreasing(plan, ladder, r, right_end, options.jobs);
      if (ok) {
        right = r;
        cert.endpoint_handling = "bound meets the target at pi/2; q' < 0 certified on [" + to_decimal(r, 10) +
                                 ", 15707963267948967/10^16], so q > q(pi/2) = 0 there";
      }
    }
    if (!ok) {
      cert.status = Status::Undecided;
      cert.endpoint_handling = "monotonicity of q near pi/2 not certified";
      return finish(cert);
    }
  } else {
    cert.endpoint_handling = "leaves cover up to 15707963267948967/10^16 >= pi/2";
  }

  std::vector<Leaf> pending{{Rational(0), options.epsilon}, {options.epsilon, right}};
  long evaluated = 0;
  bool undecided = false;
  std::optional<BigFloat> min_gap;
  const Rational tiny(1, 1L << 60);
  while (!pending.empty()) {
    if (evaluated + static_cast<long>(pending.size()) > options.max_leaves) {
      undecided = true;
      cert.endpoint_handling += "; leaf budget exhausted";
      break;
    }
    evaluated += static_cast<long>(pending.size());
    const auto outcomes = evaluate_all(pending, options.jobs, [&](const Leaf& leaf) {
      return evaluate_leaf(plan, ladder, leaf, options.direct_route);
    });
    std::vector<Leaf> next;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      const LeafOutcome& o = outcomes[i];
      if (o.sign == Sign::Negative) {
        const Rational mid = (pending[i].a + pending[i].b) / Rational(2);
        cert.status = Status::CounterexampleFound;
        cert.counterexample = to_decimal(mid, 20);
        cert.precision_bits = static_cast<int>(o.prec);
        return finish(cert);
      }
      if (o.sign == Sign::Positive) {
        ++cert.subdivisions;
        cert.precision_bits = std::max(cert.precision_bits, static_cast<int>(o.prec));
        if (!min_gap || o.gap < *min_gap) min_gap = o.gap;
        continue;
      }
      if (pending[i].b - pending[i].a < tiny) {
        undecided = true;
        continue;
      }
      const Rational mid = (pending[i].a + pending[i].b) / Rational(2);
      next.push_back({pending[i].a, mid});
      next.push_back({mid, pending[i].b});
    }
    pending = std::move(next);
  }

  cert.status = undecided ? Status::Undecided : Status::Proved;
  if (min_gap) {
    cert.min_gap = to_decimal(*min_gap, 6, MPFR_RNDD);
    cert.min_gap_value = min_gap->to_double();
  }
  return finish(cert);
}

Certificate combine(const std::string& id, const std::vector<Certificate>& parts) {
  Certificate out;
  out.claim = id;
  out.status = Status::Proved;
  bool have_gap = false;
  for (const Certificate& c : parts) {
    if (c.status == Status::CounterexampleFound ||
        (c.status == Status::Undecided && out.status == Status::Proved)) {
      out.status = c.status;
    }
    if (!out.counterexample && c.counterexample) out.counterexample = c.counterexample;
    out.subdivisions += c.subdivisions;
    out.precision_bits = std::max(out.precision_bits, c.precision_bits);
    out.wall_time_seconds += c.wall_time_seconds;
    if (!c.min_gap.empty() && (!have_gap || c.min_gap_value < out.min_gap_value)) {
      out.min_gap = c.min_gap;
      out.min_gap_value = c.min_gap_value;
      have_gap = true;
    }
    const auto join = [](std::string& dst, const std::string& s) {
      if (s.empty()) return;
      dst += dst.empty() ? s : " | " + s;
    };
    join(out.description, c.description);
    join(out.near_zero_handling, c.near_zero_handling);
    join(out.endpoint_handling, c.endpoint_handling);
  }
  if (out.status == Status::CounterexampleFound) {
    out.min_gap.clear();
    out.min_gap_value = 0.0;
  }
  return out;
}

Certificate certify_bound(const BoundPair& pair, const CertifyOptions& options) {
  const auto claims = claims_of(pair);
  std::vector<Certificate> parts;
  for (const Claim& c : claims) parts.push_back(certify_claim(c, options));
  return combine(target_prefix(*pair.target) + "-n" + std::to_string(pair.order), parts);
}

Certificate certify_bound(const WdBound& bound, const CertifyOptions& options) {
  const auto claims = claims_of(bound);
  std::vector<Certificate> parts;
  for (const Claim& c : claims) parts.push_back(certify_claim(c, options));
  return combine(target_prefix(bound.target) + "-m" + std::to_string(bound.order), parts);
}

Certificate certify_statement(int statement, const CertifyOptions& options) {
  std::vector<Certificate> parts;
  for (const Claim& c : statement_claims(statement)) parts.push_back(certify_claim(c, options));
  return combine("statement-" + std::to_string(statement), parts);
}

Enclosure evaluate_claim_bound(const Claim& claim, const Enclosure& x) {
  const mpfr_prec_t prec = x.precision();
  const Enclosure k = Enclosure::point(claim.constant, prec);
  Enclosure p = evaluate(claim.poly, x);
  switch (claim.wrapper) {
    case Wrapper::OverCosPlusConstant:
      return k + p / enclose(Fn::Cos, x);
    case Wrapper::WdCorrected:
      if (!claim.correction) throw std::invalid_argument("corrected claim without coefficient");
      return k + p +
             correction_x_coefficient(*claim.correction, claim.correction_exponent, prec) *
                 x.pow(static_cast<unsigned>(claim.correction_exponent));
    default:
      return k + p;
  }
}

}  // namespace trigbound
