#include "trigbound/truncated_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace trigbound {

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::constant(int order, const Rational& c) {
  TruncatedSeries s(order);
  s[0] = c;
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  const int n = std::min(order(), rhs.order());
  coeffs_.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) (*this)[i] += rhs[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  const int n = std::min(order(), rhs.order());
  coeffs_.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) (*this)[i] -= rhs[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

TruncatedSeries operator*(const Rational& s, TruncatedSeries a) {
  for (int i = 0; i <= a.order(); ++i) a[i] *= s;
  return a;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b[0].is_zero()) throw std::domain_error("series division by a series with zero constant term");
  const int n = std::min(a.order(), b.order());
  TruncatedSeries q(n);
  for (int i = 0; i <= n; ++i) {
    Rational acc = a[i];
    for (int j = 1; j <= i; ++j) {
      if (!b[j].is_zero()) acc -= b[j] * q[i - j];
    }
    q[i] = acc / b[0];
  }
  return q;
}

}  // namespace trigbound
