#pragma once

#include <cstdint>

#include "regrange/hilbert.hpp"
#include "regrange/polynomial.hpp"

namespace regrange {

struct RegularityRange {
  std::int64_t min_reg = 0;  ///< m_u
  std::int64_t max_reg = 0;  ///< M_u
  friend bool operator==(const RegularityRange&, const RegularityRange&) = default;
};

/// Minimal regularity of a Hilbert function with polynomial p.
std::int64_t rho_poly(const IntPolynomial& p);
/// Minimal regularity of the Hilbert function of a scheme with polynomial p.
/// For constant p this is rho_poly(p).
std::int64_t bar_rho_poly(const IntPolynomial& p);

/// f^rho_p: p(t) for t >= rho, shrink recursion below. Requires rho >= rho_poly(p).
HilbertFunction minimal_f(const IntPolynomial& p, std::int64_t rho);
/// g^rho_p: as minimal_f but g(rho-1) = p(rho-1) + 1. Requires rho >= max(1, rho_poly(p)).
/// The value at 0 is always 1.
HilbertFunction minimal_g(const IntPolynomial& p, std::int64_t rho);

/// u and delta(u) are O-sequences and the tail of u is admissible.
bool is_scheme_hf(const HilbertFunction& u);
/// Whether some scheme has polynomial p and Hilbert-function regularity rho.
bool class_nonempty(const IntPolynomial& p, std::int64_t rho);

/// Minimal Castelnuovo-Mumford regularity over schemes with Hilbert function u.
std::int64_t min_reg(const HilbertFunction& u);
/// Maximal one, cross-checked against the explicit lex ideal of delta(u).
std::int64_t max_reg(const HilbertFunction& u);

}  // namespace regrange
