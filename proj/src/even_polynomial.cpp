#include "trigbound/even_polynomial.hpp"

#include <stdexcept>

namespace trigbound {

void EvenPolynomial::add_term(int exponent, const Rational& c) {
  if (exponent < 0 || exponent % 2 != 0) {
    throw std::invalid_argument("EvenPolynomial exponent must be even and nonnegative, got " +
                                std::to_string(exponent));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational EvenPolynomial::coeff(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational EvenPolynomial::evaluate(const Rational& x) const {
  // Horner in y = x^2 over the stored exponents.
  const Rational y = x * x;
  Rational acc(0);
  int current = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc *= rat_pow(y, (current - it->first) / 2);
    acc += it->second;
    current = it->first;
  }
  if (current > 0) acc *= rat_pow(y, current / 2);
  return acc;
}

EvenPolynomial& EvenPolynomial::operator+=(const EvenPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

EvenPolynomial& EvenPolynomial::operator-=(const EvenPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

EvenPolynomial operator*(const Rational& s, const EvenPolynomial& p) {
  EvenPolynomial out;
  for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
  return out;
}

std::string EvenPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += c.sign() < 0 ? " - " : " + ";
    const Rational shown = first ? c : c.abs();
    out += shown.to_string();
    if (e > 0) out += "*x^" + std::to_string(e);
    first = false;
  }
  return out;
}

}  // namespace trigbound
