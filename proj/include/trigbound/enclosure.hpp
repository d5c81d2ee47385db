#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "trigbound/even_polynomial.hpp"
#include "trigbound/rational.hpp"

namespace trigbound {

/// Owning value wrapper around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(value_); }
  bool is_nan() const { return mpfr_nan_p(value_) != 0; }
  bool is_inf() const { return mpfr_inf_p(value_) != 0; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.value_, b.value_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.value_, b.value_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

/// Closed interval [lo, hi] with outward-rounded endpoints. Every operation
/// rounds lo toward -inf and hi toward +inf, so the result contains the exact
/// range of the operation over the operands. Results carry the larger of the
/// operand precisions.
class Enclosure {
 public:
  explicit Enclosure(mpfr_prec_t prec = 64);
  Enclosure(BigFloat lo, BigFloat hi);

  static Enclosure point(const Rational& q, mpfr_prec_t prec);
  static Enclosure point(const BigFloat& x);
  static Enclosure between(const Rational& lo, const Rational& hi, mpfr_prec_t prec);
  /// Outward-rounded enclosure of two decimal or 0x-prefixed hexadecimal strings.
  static Enclosure parse(std::string_view lo, std::string_view hi, mpfr_prec_t prec);
  static Enclosure entire(mpfr_prec_t prec);
  /// pi from a stored 100-digit expansion; tight up to about 330 bits.
  static Enclosure pi(mpfr_prec_t prec);
  static Enclosure half_pi(mpfr_prec_t prec);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  mpfr_prec_t precision() const { return std::max(lo_.precision(), hi_.precision()); }

  bool contains(const Enclosure& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool contains(const BigFloat& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Rational& q) const;
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool positive() const { return lo_.sign() > 0; }
  bool negative() const { return hi_.sign() < 0; }
  bool is_finite() const;

  /// hi - lo rounded up.
  BigFloat width() const;
  /// Nearest-rounded midpoint.
  BigFloat mid() const;

  Enclosure with_precision(mpfr_prec_t prec) const;
  /// "[lo, hi]" with the given number of significant digits, outward rounded.
  std::string to_string(int digits = 12) const;

  Enclosure& operator+=(const Enclosure& rhs);
  Enclosure& operator-=(const Enclosure& rhs);
  Enclosure& operator*=(const Enclosure& rhs);
  Enclosure& operator/=(const Enclosure& rhs);
  friend Enclosure operator+(Enclosure a, const Enclosure& b) { return a += b; }
  friend Enclosure operator-(Enclosure a, const Enclosure& b) { return a -= b; }
  friend Enclosure operator*(Enclosure a, const Enclosure& b) { return a *= b; }
  friend Enclosure operator/(Enclosure a, const Enclosure& b) { return a /= b; }
  friend Enclosure operator-(const Enclosure& a);

  Enclosure sqr() const { return pow(2); }
  Enclosure pow(unsigned n) const;

  friend std::optional<Enclosure> intersect(const Enclosure& a, const Enclosure& b);
  friend Enclosure hull(const Enclosure& a, const Enclosure& b);

 private:
  BigFloat lo_;
  BigFloat hi_;
};

/// Horner evaluation in x^2 with outward rounding.
Enclosure evaluate(const EvenPolynomial& p, const Enclosure& x);

/// Decimal rendering with sig_digits significant digits, locale independent.
std::string to_decimal(const BigFloat& x, int sig_digits, mpfr_rnd_t rnd = MPFR_RNDN);
std::string to_decimal(const Rational& q, int sig_digits);

/// Exact hexadecimal rendering "0x0.<hex digits>p<binary exponent>" that
/// Enclosure::parse reads back without rounding.
std::string to_exact_string(const BigFloat& x);

}  // namespace trigbound
