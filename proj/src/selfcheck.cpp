#include "regrange/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "regrange/construct.hpp"
#include "regrange/errors.hpp"
#include "regrange/macaulay.hpp"
#include "regrange/minfun.hpp"

namespace regrange {

namespace sample {

IntPolynomial admissible_polynomial(std::mt19937_64& rng, int max_degree, int max_length,
                                    std::vector<int>* exponents) {
  std::uniform_int_distribution<int> length_dist(1, max_length);
  std::uniform_int_distribution<int> degree_dist(0, max_degree);
  const int r = length_dist(rng);
  std::vector<int> a(static_cast<std::size_t>(r));
  for (auto& x : a) x = degree_dist(rng);
  std::sort(a.begin(), a.end(), std::greater<>());
  IntPolynomial p;
  for (int i = 1; i <= r; ++i) {
    const int ai = a[static_cast<std::size_t>(i - 1)];
    p = p + IntPolynomial::shifted_binomial(ai - i + 1, ai);
  }
  if (exponents != nullptr) *exponents = std::move(a);
  return p;
}

std::vector<Term> borel_closure(const std::vector<Term>& terms, int first_var) {
  std::set<std::vector<int>> seen;
  std::vector<Term> stack = terms;
  std::vector<Term> out;
  while (!stack.empty()) {
    Term t = stack.back();
    stack.pop_back();
    if (!seen.insert(t.exponents()).second) continue;
    out.push_back(t);
    for (int i = first_var; i < t.ambient(); ++i) {
      if (t.exponent(i) == 0) continue;
      for (int j = i + 1; j <= t.ambient(); ++j) stack.push_back(t.exchanged(i, j));
    }
  }
  return out;
}

MonomialIdeal saturated_borel_ideal(std::mt19937_64& rng, int n, int max_degree, int seeds) {
  std::uniform_int_distribution<int> degree_dist(1, max_degree);
  std::uniform_int_distribution<int> var_dist(1, n);
  std::vector<Term> picks;
  for (int k = 0; k < seeds; ++k) {
    Term t(n);
    const int d = degree_dist(rng);
    for (int e = 0; e < d; ++e) t = t.times(var_dist(rng));
    picks.push_back(t);
  }
  return MonomialIdeal(n, 0, borel_closure(picks, 1));
}

}  // namespace sample

namespace {

using Clock = std::chrono::steady_clock;

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  // Runs one case; an exception counts as a failure of that case.
  void check(const std::function<bool()>& body, const std::function<std::string()>& describe) {
    ++result_.cases;
    bool ok = false;
    std::string error;
    try {
      ok = body();
    } catch (const std::exception& e) {
      error = std::string(" raised: ") + e.what();
    }
    if (!ok) {
      ++result_.failures;
      if (result_.first_failure.empty()) result_.first_failure = describe() + error;
    }
  }

  SuiteResult finish(Clock::time_point start) {
    result_.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result_;
  }

 private:
  SuiteResult result_;
};

Integer random_integer(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> shape(0, 3);
  switch (shape(rng)) {
    case 0:
      return std::uniform_int_distribution<std::int64_t>(0, 50)(rng);
    case 1:
      return std::uniform_int_distribution<std::int64_t>(0, 100000)(rng);
    case 2:
      return std::uniform_int_distribution<std::int64_t>(0, std::int64_t{1} << 40)(rng);
    default: {
      Integer big = std::uniform_int_distribution<std::uint64_t>()(rng);
      big <<= 64;
      return big + std::uniform_int_distribution<std::uint64_t>()(rng);
    }
  }
}

SuiteResult macaulay_suite(std::mt19937_64& rng, std::uint64_t iters) {
  const auto start = Clock::now();
  Suite suite("macaulay.reconstruction_and_round_trip");
  std::uniform_int_distribution<std::int64_t> t_dist(1, 25);
  for (std::uint64_t k = 0; k < iters; ++k) {
    const Integer a = random_integer(rng);
    const std::int64_t t = t_dist(rng);
    suite.check(
        [&] {
          if (a == 0) return growth(a, t) == 0 && shrink(a, t) == 0;
          const MacaulayRep rep = macaulay_rep(a, t);
          if (rep.value() != a) return false;
          for (std::size_t j = 1; j < rep.tops.size(); ++j) {
            if (rep.tops[j] >= rep.tops[j - 1]) return false;
          }
          for (std::size_t j = 0; j < rep.tops.size(); ++j) {
            if (rep.tops[j] < t - static_cast<std::int64_t>(j)) return false;
          }
          return shrink(growth(a, t), t + 1) == a;
        },
        [&] { return "a=" + to_string(a) + ", t=" + std::to_string(t); });
  }
  return suite.finish(start);
}

HilbertFunction random_o_sequence(std::mt19937_64& rng) {
  const IntPolynomial p = sample::admissible_polynomial(rng, 3, 10);
  const std::int64_t lo = std::max<std::int64_t>(1, rho_poly(p));
  const std::int64_t rho = std::uniform_int_distribution<std::int64_t>(lo, lo + 4)(rng);
  return std::uniform_int_distribution<int>(0, 1)(rng) ? minimal_f(p, rho) : minimal_g(p, rho);
}

HilbertFunction random_scheme_hf(std::mt19937_64& rng, int max_n, int max_degree) {
  const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  const int seeds = std::uniform_int_distribution<int>(1, 3)(rng);
  return hf_quotient(sample::saturated_borel_ideal(rng, n, max_degree, seeds));
}

SuiteResult sigma_delta_suite(std::mt19937_64& rng, std::uint64_t iters) {
  const auto start = Clock::now();
  Suite suite("hilbert.sigma_delta_inverse");
  for (std::uint64_t k = 0; k < iters; ++k) {
    const HilbertFunction h = random_o_sequence(rng);
    suite.check([&] { return delta(sigma(h)) == h; }, [&] { return "delta(sigma) on " + to_display(h); });
    const HilbertFunction u = random_scheme_hf(rng, 3, 4);
    suite.check([&] { return sigma(delta(u)) == u; }, [&] { return "sigma(delta) on " + to_display(u); });
  }
  return suite.finish(start);
}

SuiteResult gotzmann_suite(std::mt19937_64& rng, std::uint64_t iters) {
  const auto start = Clock::now();
  Suite suite("hilbert.gotzmann_length");
  for (std::uint64_t k = 0; k < iters; ++k) {
    std::vector<int> a;
    const IntPolynomial p = sample::admissible_polynomial(rng, 4, 30, &a);
    suite.check([&] { return gotzmann_number(p) == static_cast<std::int64_t>(a.size()); },
                [&] { return to_string(p); });
  }
  return suite.finish(start);
}

SuiteResult minfun_suite(std::mt19937_64& rng, std::uint64_t iters) {
  const auto start = Clock::now();
  Suite suite("minfun.antitone_and_o_sequence_closure");
  for (std::uint64_t k = 0; k < iters; ++k) {
    const IntPolynomial p = sample::admissible_polynomial(rng, 3, 12);
    const std::int64_t r = gotzmann_number(p);
    const std::int64_t lo = rho_poly(p);
    const std::int64_t bar = bar_rho_poly(p);
    const std::int64_t rho = std::uniform_int_distribution<std::int64_t>(lo, std::max(lo, r))(rng);
    suite.check(
        [&] {
          const HilbertFunction f = minimal_f(p, rho);
          if (!is_o_sequence(f)) return false;
          if (rho < r && !leq(minimal_f(p, rho + 1), f)) return false;
          if (rho >= 1 && regrange::rho(f) < rho) {
            const HilbertFunction g = minimal_g(p, rho);
            if (!is_o_sequence(g) || !leq(f, g)) return false;
          }
          if (rho >= bar && !is_o_sequence(delta(f))) return false;
          return true;
        },
        [&] { return to_string(p) + ", rho=" + std::to_string(rho); });
  }
  return suite.finish(start);
}

SuiteResult propagation_suite(std::mt19937_64& rng, std::uint64_t iters) {
  const auto start = Clock::now();
  Suite suite("minfun.expansion_propagation");
  for (std::uint64_t k = 0; k < iters; ++k) {
    IntPolynomial p;
    while (p.degree() < 1) p = sample::admissible_polynomial(rng, 3, 12);
    const std::int64_t r = gotzmann_number(p);
    const std::int64_t t = std::uniform_int_distribution<std::int64_t>(1, r + 2)(rng);
    suite.check(
        [&] {
          const IntPolynomial dp = p.difference();
          const Integer pt = p(t);
          const Integer dpt = dp(t);
          if (pt < 0 || dpt < 0 || p(t - 1) < 0) return true;
          if (shrink(pt, t) != p(t - 1) || growth(dpt, t) != dp(t + 1)) return true;
          return growth(pt, t) == p(t + 1) && shrink(p(t + 1), t + 1) == pt;
        },
        [&] { return to_string(p) + ", t=" + std::to_string(t); });
  }
  return suite.finish(start);
}

SuiteResult window_suite(std::mt19937_64& rng, std::uint64_t iters) {
  const auto start = Clock::now();
  Suite suite("minfun.upper_window_exactness");
  std::uint64_t done = 0;
  while (done < iters) {
    IntPolynomial p;
    while (p.degree() < 1) p = sample::admissible_polynomial(rng, 3, 12);
    const std::int64_t r = gotzmann_number(p);
    const std::int64_t lo = std::max(gotzmann_number(p.difference()), rho_poly(p));
    for (std::int64_t rho = lo; rho < r && done < iters; ++rho, ++done) {
      suite.check([&] { return regrange::rho(minimal_f(p, rho)) == rho; },
                  [&] { return to_string(p) + ", rho=" + std::to_string(rho); });
    }
  }
  return suite.finish(start);
}

SuiteResult max_reg_suite(std::mt19937_64& rng, std::uint64_t iters) {
  const auto start = Clock::now();
  Suite suite("minfun.max_reg_closed_form_vs_lex");
  for (std::uint64_t k = 0; k < iters; ++k) {
    const HilbertFunction u = random_scheme_hf(rng, 3, 4);
    suite.check(
        [&] {
          if (is_full_ring(u)) return true;
          const HilbertFunction du = delta(u);
          const int n = default_ambient(u);
          const std::int64_t explicit_reg = reg_ss(lex_ideal(du, n, 1));
          const std::int64_t closed = u.tail().degree() == 0
                                          ? regrange::rho(u) + 1
                                          : std::max(regrange::rho(u) + 1, gotzmann_number(du.tail()));
          return explicit_reg == closed && max_reg(u) == closed;
        },
        [&] { return to_display(u); });
  }
  return suite.finish(start);
}

SuiteResult construct_suite(std::mt19937_64& rng, std::uint64_t iters) {
  const auto start = Clock::now();
  Suite suite("construct.postconditions");
  std::uint64_t done = 0;
  while (done < iters) {
    const HilbertFunction u = random_scheme_hf(rng, 3, 4);
    const RegularityRange range = regularity_range(u);
    for (auto m = range.min_reg; m <= range.max_reg && done < iters; ++m, ++done) {
      suite.check(
          [&] {
            const MonomialIdeal j = construct_scheme_ideal(u, m).ideal;
            for (const auto& g : j.generators()) {
              if (g.exponent(0) != 0) return false;
            }
            return is_strongly_stable(j) && hf_quotient(j) == u && reg_ss(j) == m;
          },
          [&] { return to_display(u) + ", m=" + std::to_string(m); });
    }
  }
  return suite.finish(start);
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  const std::uint64_t n = opts.iters;
  std::vector<SuiteResult> out;
  out.push_back(macaulay_suite(rng, n));
  out.push_back(sigma_delta_suite(rng, n));
  out.push_back(gotzmann_suite(rng, n));
  out.push_back(minfun_suite(rng, n));
  out.push_back(propagation_suite(rng, n));
  out.push_back(window_suite(rng, n));
  out.push_back(max_reg_suite(rng, n));
  out.push_back(construct_suite(rng, n));
  return out;
}

}  // namespace regrange
