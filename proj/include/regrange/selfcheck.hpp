#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "regrange/hilbert.hpp"
#include "regrange/monomial.hpp"
#include "regrange/polynomial.hpp"

namespace regrange {

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  double seconds = 0.0;
};

struct SelfcheckOptions {
  std::uint64_t seed = 20240611;
  /// Cases per suite.
  std::uint64_t iters = 10000;
};

/// Runs every property suite and returns one result per suite.
std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& opts = {});

/// Random inputs shared by the suites and the test programs.
namespace sample {

/// Admissible polynomial sum_{i=1..r} C(z + a_i - i + 1, a_i) with a_1 <= max_degree.
/// `exponents` receives a_1..a_r.
IntPolynomial admissible_polynomial(std::mt19937_64& rng, int max_degree, int max_length,
                                    std::vector<int>* exponents = nullptr);

/// Saturated strongly stable ideal of x0..xn generated by the Borel closure of a few
/// random x0-free terms of degree <= max_degree.
MonomialIdeal saturated_borel_ideal(std::mt19937_64& rng, int n, int max_degree, int seeds);

/// All terms reachable from `t` by increasing exchanges x_i -> x_j (j > i, i >= first_var).
std::vector<Term> borel_closure(const std::vector<Term>& terms, int first_var);

}  // namespace sample

}  // namespace regrange
