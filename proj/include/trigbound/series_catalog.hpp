#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "trigbound/even_polynomial.hpp"
#include "trigbound/rational.hpp"
#include "trigbound/targets.hpp"
#include "trigbound/truncated_series.hpp"

namespace trigbound {

enum class SeriesId {
  Sin,
  Cos,
  Sin3,
  Cos3,
  Cosec,
  Cosec2,
  Cotan,
  SeqA,
  SeqB,
  SeqC,
  SeqD,
  Wilker5,
  Huygens6,
};

enum class SignMode { AlternatingStartNeg, AlternatingStartPos, AllPositive };

/// Radius of the interval (0, c) on which a sequence's series is used.
enum class Radius { HalfPi, Infinite };

std::string_view to_string(SeriesId id);
/// Accepts the enumerator name ("SeqA", "Wilker5", ...) and the short
/// sequence letters "A".."D".
std::optional<SeriesId> parse_series_id(std::string_view name);
bool is_base_series(SeriesId id);

/// First admissible index k of a series.
int start_index(SeriesId id);

/// Signed coefficient of a base expansion.
///   Sin     x^{2k+1}             k >= 0
///   Cos     x^{2k}               k >= 0
///   Sin3    x^{2k+1} of sin^3    k >= 1
///   Cos3    x^{2k}   of cos^3    k >= 0 (constant term 1 included)
///   Cosec   x^{2k-1} beyond 1/x       k >= 1
///   Cosec2  x^{2k-2} beyond 1/x^2     k >= 1
///   Cotan   x^{2k-1} beyond 1/x       k >= 1
/// Throws std::out_of_range below the first index and std::invalid_argument
/// for a derived-sequence id.
Rational base_coeff(SeriesId id, long k);

/// Magnitude A(k), B(k), C(k), D(k), or the positive series coefficient of the
/// T5 and T6 expansions. Throws std::out_of_range for k < start_index.
Rational seq_coeff(SeriesId id, long k);

/// A coefficient sequence together with its sign convention.
struct CoeffSeq {
  std::string name;
  std::optional<SeriesId> id;
  int start_k = 2;
  Radius radius = Radius::HalfPi;
  SignMode sign_mode = SignMode::AlternatingStartNeg;
  std::function<Rational(long)> magnitude;

  Rational signed_coeff(long k) const;
};

/// Catalog entry for a derived sequence (SeqA..Huygens6).
CoeffSeq catalog_seq(SeriesId id);

/// Signed partial sum over start_k <= k <= upto_k as a polynomial in x^{2k}.
/// Empty range gives the zero polynomial.
EvenPolynomial truncate(const CoeffSeq& seq, long upto_k);

/// Expressions whose Taylor polynomials are produced by exact series
/// arithmetic on the sin/cos expansions, independently of seq_coeff.
/// Constants are removed so that coefficient k equals the signed sequence
/// coefficient:
///   CosMinusSincCubed        cos x - (sin x/x)^3                    (SeqA)
///   SincMinusCusa            sin x/x - (cos x + 2)/3                (SeqB)
///   TwoSincPlusTancTimesCos  cos x * (2 sin x/x + tan x/x - 3)      (SeqC)
///   WilkerCombination        cos x * ((sin x/x)^2 + tan x/x - 2)    (SeqD)
///   ReciprocalWilker         (x/sin x)^2 + x/tan x - 2              (Wilker5)
///   HuygensCombination       3 x/sin x + cos x - 4                  (Huygens6)
enum class OracleExpr {
  CosMinusSincCubed,
  SincMinusCusa,
  TwoSincPlusTancTimesCos,
  WilkerCombination,
  ReciprocalWilker,
  HuygensCombination,
};

inline constexpr int kMaxOracleDegree = 60;

/// Taylor polynomial of the expression through x^degree. degree must be even
/// and at most kMaxOracleDegree.
EvenPolynomial oracle_series(OracleExpr expr, int degree);

/// Same expansion without the degree cap.
EvenPolynomial taylor_expansion(OracleExpr expr, int degree);

OracleExpr oracle_for(SeriesId derived);
OracleExpr oracle_for(TargetId target);
SeriesId sequence_for(TargetId target);

}  // namespace trigbound
