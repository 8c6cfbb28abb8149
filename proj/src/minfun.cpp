#include "regrange/minfun.hpp"

#include <algorithm>

#include "regrange/errors.hpp"
#include "regrange/macaulay.hpp"
#include "regrange/monomial.hpp"

namespace regrange {

std::int64_t rho_poly(const IntPolynomial& p) {
  const std::int64_t r = gotzmann_number(p);
  // growth condition at s, needed for every s in [t, r+1]; past r+1 it holds with
  // equality along the lex Hilbert function.
  auto holds_at = [&p](std::int64_t s) {
    const Integer here = p(s);
    const Integer next = p(s + 1);
    return here >= 0 && next >= 1 && growth(here, s) >= next;
  };
  std::int64_t min_pi = 0;
  for (std::int64_t s = r + 1; s >= 1; --s) {
    if (!holds_at(s)) break;
    if (s <= r) min_pi = s;
  }
  if (min_pi == 0) {
    throw CertificationError("empty admissible-regularity set for " + to_string(p));
  }
  return (min_pi == 1 && p(0) == 1) ? 0 : min_pi;
}

std::int64_t bar_rho_poly(const IntPolynomial& p) {
  const std::int64_t base = rho_poly(p);
  if (p.degree() <= 0) return base;
  return std::max(base, rho_poly(p.difference()) - 1);
}

HilbertFunction minimal_f(const IntPolynomial& p, std::int64_t rho) {
  if (rho < rho_poly(p)) {
    throw InvalidInput("minimal_f: rho=" + std::to_string(rho) + " is below the minimal regularity " +
                       std::to_string(rho_poly(p)) + " of " + to_string(p));
  }
  std::vector<Integer> values(static_cast<std::size_t>(rho) + 1);
  values.back() = p(rho);
  for (std::int64_t t = rho - 1; t >= 0; --t) {
    values[static_cast<std::size_t>(t)] = shrink(values[static_cast<std::size_t>(t) + 1], t + 1);
  }
  values.pop_back();
  return HilbertFunction(std::move(values), p);
}

HilbertFunction minimal_g(const IntPolynomial& p, std::int64_t rho) {
  if (rho < std::max<std::int64_t>(1, rho_poly(p))) {
    throw InvalidInput("minimal_g: rho=" + std::to_string(rho) + " is below max(1, " +
                       std::to_string(rho_poly(p)) + ")");
  }
  std::vector<Integer> values(static_cast<std::size_t>(rho));
  values.back() = p(rho - 1) + 1;
  for (std::int64_t t = rho - 2; t >= 0; --t) {
    values[static_cast<std::size_t>(t)] = shrink(values[static_cast<std::size_t>(t) + 1], t + 1);
  }
  values.front() = 1;
  return HilbertFunction(std::move(values), p);
}

bool is_scheme_hf(const HilbertFunction& u) {
  try {
    return !u.tail().is_zero() && is_admissible(u.tail()) && is_o_sequence(u) &&
           is_o_sequence(delta(u));
  } catch (const InvalidInput&) {
    return false;
  }
}

bool class_nonempty(const IntPolynomial& p, std::int64_t rho) {
  if (!is_admissible(p)) throw InvalidInput("class_nonempty: " + to_string(p) + " is not admissible");
  const std::int64_t bar = bar_rho_poly(p);
  if (rho < bar) return false;
  if (rho == bar) return true;
  try {
    const HilbertFunction f = minimal_f(p, rho);
    if (regrange::rho(f) == rho) return is_scheme_hf(f);
    return is_scheme_hf(minimal_g(p, rho));
  } catch (const InvalidInput&) {
    return false;
  }
}

namespace {

std::int64_t min_reg_of_scheme(const HilbertFunction& u) {
  if (is_full_ring(u)) return 0;
  if (u.tail().degree() == 0) return rho(u) + 1;

  const IntPolynomial dp = u.tail().difference();
  const HilbertFunction du = delta(u);
  const std::int64_t lo = bar_rho_poly(dp);
  const std::int64_t hi = std::max(lo, rho(du));
  for (std::int64_t t = lo; t <= hi; ++t) {
    HilbertFunction section = minimal_f(dp, t);
    if (!leq(section, du)) continue;
    if (!is_scheme_hf(section)) {
      throw CertificationError("minimal function " + to_display(section) +
                               " is not the Hilbert function of a scheme");
    }
    return std::max(min_reg_of_scheme(section), rho(u) + 1);
  }
  throw CertificationError("no minimal function of " + to_string(dp) + " lies below " + to_display(du));
}

}  // namespace

std::int64_t min_reg(const HilbertFunction& u) {
  if (!is_scheme_hf(u)) throw InvalidInput(to_display(u) + " is not the Hilbert function of a scheme");
  return min_reg_of_scheme(u);
}

std::int64_t max_reg(const HilbertFunction& u) {
  if (!is_scheme_hf(u)) throw InvalidInput(to_display(u) + " is not the Hilbert function of a scheme");
  if (is_full_ring(u)) return 0;
  const std::int64_t closed = u.tail().degree() == 0
                                  ? rho(u) + 1
                                  : std::max(rho(u) + 1, gotzmann_number(u.tail().difference()));
  const int n = static_cast<int>(to_int64(u(1) - 1, "ambient"));
  const std::int64_t explicit_reg = reg_ss(lex_ideal(delta(u), n, 1));
  if (closed != explicit_reg) {
    throw CertificationError("maximal regularity mismatch for " + to_display(u) + ": closed form " +
                             std::to_string(closed) + ", lex ideal " + std::to_string(explicit_reg));
  }
  return closed;
}

}  // namespace regrange
