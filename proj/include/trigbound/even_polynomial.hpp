#pragma once

#include <map>
#include <string>

#include "trigbound/rational.hpp"

namespace trigbound {

/// Sparse polynomial in x with only even, nonnegative exponents.
/// Zero coefficients are never stored.
class EvenPolynomial {
 public:
  EvenPolynomial() = default;

  /// Adds c * x^exponent. Throws std::invalid_argument on odd or negative exponents.
  void add_term(int exponent, const Rational& c);

  Rational coeff(int exponent) const;
  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest exponent, or -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

  Rational evaluate(const Rational& x) const;

  EvenPolynomial& operator+=(const EvenPolynomial& rhs);
  EvenPolynomial& operator-=(const EvenPolynomial& rhs);
  friend EvenPolynomial operator+(EvenPolynomial a, const EvenPolynomial& b) { return a += b; }
  friend EvenPolynomial operator-(EvenPolynomial a, const EvenPolynomial& b) { return a -= b; }
  friend EvenPolynomial operator*(const Rational& s, const EvenPolynomial& p);
  friend bool operator==(const EvenPolynomial&, const EvenPolynomial&) = default;

  /// Human-readable form, e.g. "-1/15*x^4 + 23/1890*x^6".
  std::string to_string() const;

 private:
  std::map<int, Rational> terms_;
};

}  // namespace trigbound
