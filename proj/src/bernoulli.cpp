#include "trigbound/bernoulli.hpp"

namespace trigbound {

BernoulliTable::BernoulliTable() : values_{Rational(1), Rational(-1, 2)} {}

Rational BernoulliTable::operator()(unsigned n) {
  std::lock_guard lock(mutex_);
  grow_to(n);
  return values_[n];
}

std::size_t BernoulliTable::size() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

void BernoulliTable::grow_to(unsigned n) {
  while (values_.size() <= n) {
    const unsigned m = static_cast<unsigned>(values_.size());
    if (m % 2 == 1) {
      values_.emplace_back(0);
      continue;
    }
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j; odd j >= 3 vanish.
    Rational sum = Rational(binomial(m + 1, 1)) * values_[1];
    for (unsigned j = 0; j < m; j += 2) {
      sum += Rational(binomial(m + 1, j)) * values_[j];
    }
    values_.push_back(-sum / Rational(static_cast<long>(m + 1)));
  }
}

Rational bernoulli(unsigned n) {
  static BernoulliTable table;
  return table(n);
}

}  // namespace trigbound
