#pragma once

#include <mutex>
#include <vector>

#include "trigbound/rational.hpp"

namespace trigbound {

/// Memoized Bernoulli numbers B_n (B_1 = -1/2), grown on demand from
///   sum_{j=0}^{n} C(n+1, j) B_j = 0,  n >= 1.
/// Growth is serialized by a mutex; readers always see a complete prefix.
class BernoulliTable {
 public:
  BernoulliTable();

  Rational operator()(unsigned n);

  /// Number of entries currently stored.
  std::size_t size() const;

 private:
  void grow_to(unsigned n);

  mutable std::mutex mutex_;
  std::vector<Rational> values_;
};

/// B_n from the process-wide table.
Rational bernoulli(unsigned n);

}  // namespace trigbound
