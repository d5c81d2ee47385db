#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigbound/even_polynomial.hpp"
#include "trigbound/rational.hpp"
#include "trigbound/verifier.hpp"

namespace trigbound {

/// Dense polynomial with rational coefficients; coeffs()[i] multiplies x^i.
/// Trailing zeros are trimmed.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Rational> coeffs);
  static DensePoly from_integers(const std::vector<long>& coeffs);
  static DensePoly from_even(const EvenPolynomial& p);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  Rational evaluate(const Rational& x) const;
  /// Coefficients of t -> p(a + t).
  DensePoly taylor_shift(const Rational& a) const;

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b);
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b);
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
  friend DensePoly operator-(const DensePoly& a);
  friend bool operator==(const DensePoly&, const DensePoly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// numerator / denominator; the denominator must not be the zero polynomial.
struct RationalFunction {
  RationalFunction(DensePoly num, DensePoly den);
  DensePoly numerator;
  DensePoly denominator;
};

struct PositivityOptions {
  long max_leaves = 100000;
  /// Printed in the certificate.
  std::string claim = "p > 0";
  std::string interval_label;
};

/// Strict positivity of p on the open interval (a, b), a < b. Zeros of p at a
/// or b are factored out first; the rest is certified on [a, b] by bisection
/// with an exact Taylor shift at each leaf's left end.
Certificate certify_positive(const DensePoly& p, const Rational& a, const Rational& b,
                             const PositivityOptions& options = {});
Certificate certify_positive(const EvenPolynomial& p, const Rational& a, const Rational& b,
                             const PositivityOptions& options = {});
/// Certifies that the denominator keeps one sign on [a, b], then that the
/// numerator has the same sign on (a, b).
Certificate certify_positive(const RationalFunction& rf, const Rational& a, const Rational& b,
                             const PositivityOptions& options = {});

/// Integer coefficients of Bercu's rational function N/D, ascending powers.
const std::vector<long>& bercu_numerator();
const std::vector<long>& bercu_denominator();

/// 2 + sum_{k=2}^{m} c_k x^{2k} with the T5 series coefficients.
EvenPolynomial bercu_polynomial(int m);

/// Certifies D > 0 and P_m D - N > 0 on (0, b); b defaults to a rational
/// upper bound of pi/2. Requires m >= 2.
Certificate bercu_check(int m = 7, const std::optional<Rational>& b = std::nullopt,
                        const PositivityOptions& options = {});

}  // namespace trigbound
