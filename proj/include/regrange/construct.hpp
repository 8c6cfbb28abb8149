#pragma once

#include <cstdint>
#include <optional>

#include "regrange/borelvec.hpp"
#include "regrange/hilbert.hpp"
#include "regrange/minfun.hpp"
#include "regrange/monomial.hpp"

namespace regrange {

/// [m_u, M_u] for schemes with Hilbert function u in P^n. The default ambient is
/// n = u(1) - 1; a larger n only matters when u is the function of a linear space.
RegularityRange regularity_range(const HilbertFunction& u, std::optional<int> ambient_n = {});

/// Default ambient used for u: u(1) - 1.
int default_ambient(const HilbertFunction& u);

struct Construction {
  HilbertFunction hilbert;  ///< u (or f for the algebraic pipeline)
  RegularityRange range;
  std::int64_t requested = 0;
  VectorPair vectors;
  MonomialIdeal ideal;
};

/// Saturated strongly stable ideal in x_0..x_n with Hilbert function u and regularity m,
/// obtained from the growth-height-lexicographic Borel set in degree m.
/// Throws OutOfRange outside [m_u, M_u] and CertificationError if a postcondition fails.
Construction construct_scheme_ideal(const HilbertFunction& u, std::int64_t m,
                                    std::optional<int> ambient_n = {});

/// Strongly stable ideal in x_1..x_n with quotient Hilbert function f and regularity a.
Construction construct_algebraic(const HilbertFunction& f, std::int64_t a);

}  // namespace regrange
