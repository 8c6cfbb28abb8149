#pragma once

#include <cstdint>
#include <vector>

#include "regrange/hilbert.hpp"
#include "regrange/monomial.hpp"

namespace regrange {

/// Height vector (|B(0)|..|B(m)|, bucketed by the x_0 exponent) and growth vector
/// (|B^(0)|..|B^(n)|, bucketed by the smallest variable) of a degree-m Borel set.
struct VectorPair {
  std::vector<std::int64_t> hv;
  std::vector<std::int64_t> gv;
  int degree = 0;
  int ambient = 0;

  /// Throws InfeasibleVectors when sizes, bucket identities or class bounds fail.
  void validate() const;

  friend bool operator==(const VectorPair&, const VectorPair&) = default;
};

/// Requires a Borel set over x_0..x_n.
VectorPair vectors_of(const BorelSet& b);

/// Height vector forced on J_m for a saturated J with Hilbert function u.
std::vector<std::int64_t> hv_from(const HilbertFunction& u, int m, int ambient_n);
/// Growth vector forced on J_m, the solution of the symmetric Pascal system.
std::vector<std::int64_t> gv_from(const IntPolynomial& p, int m, int ambient_n);

/// The growth-height-lexicographic Borel set with the given vectors.
BorelSet ghl_construct(const VectorPair& vp);
bool is_ghl(const BorelSet& b);

}  // namespace regrange
