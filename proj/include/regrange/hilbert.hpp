#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "regrange/integer.hpp"
#include "regrange/polynomial.hpp"

namespace regrange {

/// Eventually-polynomial numerical function: H(t) = prefix[t] for t < prefix.size(),
/// H(t) = tail(t) afterwards. Always canonical (the last prefix entry differs from
/// the tail) and nonnegative at every t >= 0.
class HilbertFunction {
 public:
  /// The zero function.
  HilbertFunction() = default;
  /// Canonicalizes; throws InvalidInput if some value is negative.
  HilbertFunction(std::vector<Integer> prefix, IntPolynomial tail);
  explicit HilbertFunction(IntPolynomial tail) : HilbertFunction({}, std::move(tail)) {}

  Integer operator()(std::int64_t t) const;

  const std::vector<Integer>& prefix() const { return prefix_; }
  const IntPolynomial& tail() const { return tail_; }
  /// Least t from which H agrees with its polynomial (the canonical prefix length).
  std::int64_t regularity_index() const { return static_cast<std::int64_t>(prefix_.size()); }

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;

 private:
  std::vector<Integer> prefix_;
  IntPolynomial tail_;
};

/// H(t) for t >= 0.
inline Integer eval(const HilbertFunction& h, std::int64_t t) { return h(t); }

/// First derivative with the convention delta(H)(0) := 1. Requires H(0) == 1.
HilbertFunction delta(const HilbertFunction& h);
/// Integral: sigma(H)(0) := 1, sigma(H)(t) = sigma(H)(t-1) + H(t). Requires H(0) == 1.
HilbertFunction sigma(const HilbertFunction& h);
/// Regularity of the numerical function.
std::int64_t rho(const HilbertFunction& h);
/// A(t) <= B(t) for every t >= 0, decided exactly.
bool leq(const HilbertFunction& a, const HilbertFunction& b);
/// H(0) == 1 and H(t+1) <= growth(H(t), t) for every t >= 1.
bool is_o_sequence(const HilbertFunction& h);

/// True when h is C(z+n, n) with n = h(1) - 1, the function of the whole ring.
bool is_full_ring(const HilbertFunction& h);
/// Maximal generator degree of lex(h): 0 for the full ring,
/// rho(h) for a zero tail, max(rho(h), r_tail) otherwise. Requires an O-sequence.
std::int64_t lex_regularity(const HilbertFunction& h);

/// One block of equal exponents in p(z) = sum_{i=1..r} C(z + a_i - i + 1, a_i).
struct GotzmannBlock {
  int exponent = 0;   ///< a_i
  Integer count;      ///< how many consecutive i carry this exponent
};

struct GotzmannDecomposition {
  std::vector<GotzmannBlock> blocks;  ///< exponents strictly decreasing
  Integer length;                     ///< r
};

/// Greedy peeling of binomial blocks. Throws InvalidInput when p is not admissible
/// (the zero polynomial included).
GotzmannDecomposition gotzmann_decomposition(const IntPolynomial& p);
std::int64_t gotzmann_number(const IntPolynomial& p);
bool is_admissible(const IntPolynomial& p);

/// "v0,v1,...,vk ; P" or a bare "P". Whitespace is ignored.
HilbertFunction parse_hilbert_function(std::string_view text);
/// Literal accepted by parse_hilbert_function, e.g. "1,4,8 ; 4z+1".
std::string to_literal(const HilbertFunction& h);
/// Tuple display, e.g. "(1,4,8,4z+1)".
std::string to_display(const HilbertFunction& h);

}  // namespace regrange
