#include "regrange/macaulay.hpp"

#include "regrange/errors.hpp"

namespace regrange {

namespace {

// Largest k >= i with C(k, i) <= a. Requires a >= 1, i >= 1.
Integer greedy_top(const Integer& a, std::int64_t i) {
  Integer lo = i;  // C(i, i) = 1 <= a
  Integer step = 1;
  Integer hi = lo + step;
  while (binomial(hi, i) <= a) {
    lo = hi;
    step *= 2;
    hi = lo + step;
  }
  // invariant: C(lo, i) <= a < C(hi, i)
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (binomial(mid, i) <= a) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

Integer MacaulayRep::value() const {
  Integer sum = 0;
  std::int64_t i = base;
  for (const auto& k : tops) sum += binomial(k, i--);
  return sum;
}

MacaulayRep macaulay_rep(const Integer& a, std::int64_t t) {
  if (a <= 0) throw InvalidInput("macaulay_rep: a must be positive, got " + to_string(a));
  if (t <= 0) throw InvalidInput("macaulay_rep: base must be positive");
  MacaulayRep rep;
  rep.base = t;
  Integer rest = a;
  for (std::int64_t i = t; i >= 1 && rest > 0; --i) {
    Integer k = greedy_top(rest, i);
    rest -= binomial(k, i);
    rep.tops.push_back(std::move(k));
  }
  return rep;
}

Integer growth(const Integer& a, std::int64_t t) {
  if (t <= 0) throw InvalidInput("growth: base must be positive");
  if (a < 0) throw InvalidInput("growth: negative argument " + to_string(a));
  if (a == 0) return 0;
  const MacaulayRep rep = macaulay_rep(a, t);
  Integer sum = 0;
  std::int64_t i = t;
  for (const auto& k : rep.tops) sum += binomial(k + 1, 1 + i--);
  return sum;
}

Integer shrink(const Integer& a, std::int64_t t) {
  if (t <= 0) throw InvalidInput("shrink: base must be positive");
  if (a < 0) throw InvalidInput("shrink: negative argument " + to_string(a));
  if (a == 0) return 0;
  const MacaulayRep rep = macaulay_rep(a, t);
  Integer sum = 0;
  std::int64_t i = t;
  for (const auto& k : rep.tops) sum += binomial(k - 1, i-- - 1);
  return sum;
}

}  // namespace regrange
