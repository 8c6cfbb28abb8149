#pragma once

#include <cstdint>
#include <vector>

#include "regrange/integer.hpp"

namespace regrange {

/// Binomial expansion of a positive integer in base t:
///   a = C(k(t), t) + C(k(t-1), t-1) + ... + C(k(j), j)
/// with k(t) > k(t-1) > ... > k(j) >= j >= 1. Trailing zero binomials are dropped.
struct MacaulayRep {
  std::int64_t base = 1;
  /// tops[0] = k(t), tops[1] = k(t-1), ...
  std::vector<Integer> tops;

  /// Lower index j of the last kept binomial.
  std::int64_t lowest_index() const {
    return base - static_cast<std::int64_t>(tops.size()) + 1;
  }
  Integer value() const;

  friend bool operator==(const MacaulayRep&, const MacaulayRep&) = default;
};

/// Greedy (hence unique) representation. Throws InvalidInput for a <= 0 or t <= 0.
MacaulayRep macaulay_rep(const Integer& a, std::int64_t t);

/// Maximal growth (a_t)^+_+: every binomial C(k, i) becomes C(k+1, i+1).
/// growth(0, t) == 0.
Integer growth(const Integer& a, std::int64_t t);

/// (a_t)^-_-: every binomial C(k, i) becomes C(k-1, i-1). shrink(0, t) == 0.
Integer shrink(const Integer& a, std::int64_t t);

}  // namespace regrange
