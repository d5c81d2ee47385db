#include "trigbound/series_catalog.hpp"

#include <array>
#include <stdexcept>

#include "trigbound/bernoulli.hpp"

namespace trigbound {

namespace {

struct SeriesInfo {
  SeriesId id;
  std::string_view name;
  int start;
};

constexpr std::array<SeriesInfo, 13> kSeries{{
    {SeriesId::Sin, "Sin", 0},
    {SeriesId::Cos, "Cos", 0},
    {SeriesId::Sin3, "Sin3", 1},
    {SeriesId::Cos3, "Cos3", 0},
    {SeriesId::Cosec, "Cosec", 1},
    {SeriesId::Cosec2, "Cosec2", 1},
    {SeriesId::Cotan, "Cotan", 1},
    {SeriesId::SeqA, "SeqA", 2},
    {SeriesId::SeqB, "SeqB", 2},
    {SeriesId::SeqC, "SeqC", 2},
    {SeriesId::SeqD, "SeqD", 2},
    {SeriesId::Wilker5, "Wilker5", 2},
    {SeriesId::Huygens6, "Huygens6", 1},
}};

const SeriesInfo& info(SeriesId id) { return kSeries[static_cast<std::size_t>(id)]; }

BigInt ipow(unsigned long base, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

Rational alt(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

void require_index(SeriesId id, long k) {
  if (k < info(id).start) {
    throw std::out_of_range(std::string(info(id).name) + ": index " + std::to_string(k) +
                            " is below the first term k = " + std::to_string(info(id).start));
  }
}

Rational abs_bernoulli(long k) { return bernoulli(static_cast<unsigned>(2 * k)).abs(); }

// sin x / x through x^order.
TruncatedSeries sinc_series(int order) {
  TruncatedSeries s(order);
  for (int k = 0; 2 * k <= order; ++k) s[2 * k] = base_coeff(SeriesId::Sin, k);
  return s;
}

TruncatedSeries cos_series(int order) {
  TruncatedSeries s(order);
  for (int k = 0; 2 * k <= order; ++k) s[2 * k] = base_coeff(SeriesId::Cos, k);
  return s;
}

}  // namespace

std::string_view to_string(SeriesId id) { return info(id).name; }

std::optional<SeriesId> parse_series_id(std::string_view name) {
  if (name == "A") return SeriesId::SeqA;
  if (name == "B") return SeriesId::SeqB;
  if (name == "C") return SeriesId::SeqC;
  if (name == "D") return SeriesId::SeqD;
  for (const auto& s : kSeries) {
    if (s.name == name) return s.id;
  }
  return std::nullopt;
}

bool is_base_series(SeriesId id) { return static_cast<int>(id) <= static_cast<int>(SeriesId::Cotan); }

int start_index(SeriesId id) { return info(id).start; }

Rational base_coeff(SeriesId id, long k) {
  if (!is_base_series(id)) {
    throw std::invalid_argument(std::string(to_string(id)) + " is not a base series");
  }
  require_index(id, k);
  const auto uk = static_cast<unsigned long>(k);
  switch (id) {
    case SeriesId::Sin:
      return alt(k) / Rational(factorial(2 * uk + 1));
    case SeriesId::Cos:
      return alt(k) / Rational(factorial(2 * uk));
    case SeriesId::Sin3:
      return -alt(k) * Rational(ipow(3, 2 * uk + 1) - 3, 4 * factorial(2 * uk + 1));
    case SeriesId::Cos3:
      return alt(k) * Rational(ipow(3, 2 * uk) + 3, 4 * factorial(2 * uk));
    case SeriesId::Cosec:
      return abs_bernoulli(k) * Rational(ipow(2, 2 * uk) - 2, factorial(2 * uk));
    case SeriesId::Cosec2:
      return abs_bernoulli(k) * Rational(BigInt(2 * k - 1) * ipow(4, uk), factorial(2 * uk));
    case SeriesId::Cotan:
      return -abs_bernoulli(k) * Rational(ipow(4, uk), factorial(2 * uk));
    default:
      break;
  }
  throw std::invalid_argument("unsupported base series");
}

Rational seq_coeff(SeriesId id, long k) {
  if (is_base_series(id)) {
    throw std::invalid_argument(std::string(to_string(id)) + " is not a derived sequence");
  }
  require_index(id, k);
  const auto uk = static_cast<unsigned long>(k);
  const BigInt bk(k);
  switch (id) {
    case SeriesId::SeqA:
      return Rational(ipow(3, 2 * uk + 3) - 32 * bk * bk * bk - 96 * bk * bk - 88 * bk - 27,
                      4 * factorial(2 * uk + 3));
    case SeriesId::SeqB:
      return Rational(2 * (bk - 1), 3 * factorial(2 * uk + 1));
    case SeriesId::SeqC:
      return Rational(2 * (ipow(4, uk) - 3 * bk - 1), factorial(2 * uk + 1));
    case SeriesId::SeqD:
      return Rational(ipow(9, uk + 1) - 32 * bk * bk - 40 * bk - 9, 4 * factorial(2 * uk + 2));
    case SeriesId::Wilker5:
      return abs_bernoulli(k) * Rational((2 * bk - 2) * ipow(4, uk), factorial(2 * uk));
    case SeriesId::Huygens6:
      return (3 * abs_bernoulli(k) * Rational(BigInt(ipow(2, 2 * uk) - 2)) + alt(k)) /
             Rational(factorial(2 * uk));
    default:
      break;
  }
  throw std::invalid_argument("unsupported derived sequence");
}

Rational CoeffSeq::signed_coeff(long k) const {
  const Rational m = magnitude(k);
  switch (sign_mode) {
    case SignMode::AlternatingStartNeg:
      return (k % 2 == 0) ? -m : m;
    case SignMode::AlternatingStartPos:
      return (k % 2 == 0) ? m : -m;
    case SignMode::AllPositive:
      return m;
  }
  return m;
}

CoeffSeq catalog_seq(SeriesId id) {
  if (is_base_series(id)) {
    throw std::invalid_argument(std::string(to_string(id)) + " is not a derived sequence");
  }
  CoeffSeq seq;
  seq.name = std::string(to_string(id));
  seq.id = id;
  seq.start_k = start_index(id);
  seq.radius = Radius::HalfPi;
  switch (id) {
    case SeriesId::SeqA:
    case SeriesId::SeqB:
      seq.sign_mode = SignMode::AlternatingStartNeg;
      break;
    case SeriesId::SeqC:
    case SeriesId::SeqD:
      seq.sign_mode = SignMode::AlternatingStartPos;
      break;
    default:
      seq.sign_mode = SignMode::AllPositive;
      break;
  }
  seq.magnitude = [id](long k) { return seq_coeff(id, k); };
  return seq;
}

EvenPolynomial truncate(const CoeffSeq& seq, long upto_k) {
  EvenPolynomial p;
  for (long k = seq.start_k; k <= upto_k; ++k) {
    p.add_term(static_cast<int>(2 * k), seq.signed_coeff(k));
  }
  return p;
}

EvenPolynomial taylor_expansion(OracleExpr expr, int degree) {
  if (degree < 0 || degree % 2 != 0) {
    throw std::invalid_argument("expansion degree must be even and nonnegative");
  }
  const TruncatedSeries sinc = sinc_series(degree);
  const TruncatedSeries cosx = cos_series(degree);
  const auto c = [degree](long v) { return TruncatedSeries::constant(degree, Rational(v)); };

  TruncatedSeries s(degree);
  switch (expr) {
    case OracleExpr::CosMinusSincCubed:
      s = cosx - sinc * sinc * sinc;
      break;
    case OracleExpr::SincMinusCusa:
      s = sinc - Rational(1, 3) * (cosx + c(2));
      break;
    case OracleExpr::TwoSincPlusTancTimesCos:
      s = cosx * (Rational(2) * sinc + sinc / cosx - c(3));
      break;
    case OracleExpr::WilkerCombination:
      s = cosx * (sinc * sinc + sinc / cosx - c(2));
      break;
    case OracleExpr::ReciprocalWilker:
      s = c(1) / (sinc * sinc) + cosx / sinc - c(2);
      break;
    case OracleExpr::HuygensCombination:
      s = Rational(3) * (c(1) / sinc) + cosx - c(4);
      break;
    default:
      throw std::invalid_argument("unsupported oracle expression");
  }

  EvenPolynomial out;
  for (int i = 0; i <= degree; ++i) {
    if (i % 2 == 1) {
      if (!s[i].is_zero()) throw std::logic_error("odd coefficient in an even expansion");
      continue;
    }
    out.add_term(i, s[i]);
  }
  return out;
}

EvenPolynomial oracle_series(OracleExpr expr, int degree) {
  if (degree > kMaxOracleDegree) {
    throw std::invalid_argument("oracle_series degree " + std::to_string(degree) + " exceeds cap " +
                                std::to_string(kMaxOracleDegree));
  }
  return taylor_expansion(expr, degree);
}

OracleExpr oracle_for(SeriesId derived) {
  switch (derived) {
    case SeriesId::SeqA: return OracleExpr::CosMinusSincCubed;
    case SeriesId::SeqB: return OracleExpr::SincMinusCusa;
    case SeriesId::SeqC: return OracleExpr::TwoSincPlusTancTimesCos;
    case SeriesId::SeqD: return OracleExpr::WilkerCombination;
    case SeriesId::Wilker5: return OracleExpr::ReciprocalWilker;
    case SeriesId::Huygens6: return OracleExpr::HuygensCombination;
    default: break;
  }
  throw std::invalid_argument(std::string(to_string(derived)) + " has no oracle expression");
}

SeriesId sequence_for(TargetId target) {
  switch (target) {
    case TargetId::T1: return SeriesId::SeqA;
    case TargetId::T2: return SeriesId::SeqB;
    case TargetId::T3: return SeriesId::SeqC;
    case TargetId::T4: return SeriesId::SeqD;
    case TargetId::T5: return SeriesId::Wilker5;
    case TargetId::T6: return SeriesId::Huygens6;
  }
  throw std::invalid_argument("unknown target");
}

OracleExpr oracle_for(TargetId target) { return oracle_for(sequence_for(target)); }

int theorem_number(TargetId t) { return static_cast<int>(t) + 1; }

std::optional<TargetId> target_from_theorem(int theorem) {
  if (theorem < 1 || theorem > 6) return std::nullopt;
  return static_cast<TargetId>(theorem - 1);
}

std::string_view target_formula(TargetId t) {
  switch (t) {
    case TargetId::T1: return "cos(x) - (sin(x)/x)^3";
    case TargetId::T2: return "sin(x)/x - (cos(x) + 2)/3";
    case TargetId::T3: return "2*sin(x)/x + tan(x)/x";
    case TargetId::T4: return "(sin(x)/x)^2 + tan(x)/x";
    case TargetId::T5: return "(x/sin(x))^2 + x/tan(x)";
    case TargetId::T6: return "3*x/sin(x) + cos(x)";
  }
  return "";
}

std::string_view target_latex(TargetId t) {
  switch (t) {
    case TargetId::T1: return "\\cos x - \\left(\\frac{\\sin x}{x}\\right)^{3}";
    case TargetId::T2: return "\\frac{\\sin x}{x} - \\frac{\\cos x + 2}{3}";
    case TargetId::T3: return "2\\frac{\\sin x}{x} + \\frac{\\tan x}{x}";
    case TargetId::T4: return "\\left(\\frac{\\sin x}{x}\\right)^{2} + \\frac{\\tan x}{x}";
    case TargetId::T5: return "\\left(\\frac{x}{\\sin x}\\right)^{2} + \\frac{x}{\\tan x}";
    case TargetId::T6: return "3\\frac{x}{\\sin x} + \\cos x";
  }
  return "";
}

}  // namespace trigbound
