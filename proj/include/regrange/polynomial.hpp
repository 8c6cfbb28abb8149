#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "regrange/integer.hpp"

namespace regrange {

/// Integer-valued polynomial in one variable z, stored in the binomial basis:
///   p(z) = sum_i c_i * C(z, i).
/// Integer coefficients in this basis are exactly the integer-valued polynomials.
/// Trailing zero coefficients are stripped; the empty list is the zero polynomial.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> binomial_coeffs);

  static IntPolynomial constant(const Integer& c);
  /// C(z + shift, k) as a polynomial in z.
  static IntPolynomial shifted_binomial(const Integer& shift, std::int64_t k);
  /// The unique polynomial of degree < values.size() taking values[i] at z = start + i.
  static IntPolynomial interpolate(const Integer& start, std::span<const Integer> values);
  /// Conversion from power-basis coefficients a_0 + a_1 z + ...; throws InvalidInput
  /// when the polynomial is not integer-valued.
  static IntPolynomial from_power_basis(std::span<const Rational> coeffs);

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Leading binomial-basis coefficient (zero for the zero polynomial).
  Integer leading() const;

  Integer operator()(const Integer& z) const;
  Integer operator()(std::int64_t z) const { return (*this)(Integer(z)); }

  /// p(z) - p(z-1).
  IntPolynomial difference() const;
  std::vector<Rational> power_basis() const;

  /// An integer B such that p(t) is nonzero with the sign of the leading
  /// coefficient for every integer t >= B (Cauchy root bound). 0 for constants.
  Integer sign_bound() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void strip();
  std::vector<Integer> coeffs_;
};

/// Power-basis text in z, e.g. "2z^2+3z+1", "28z-90", "1/2z^2+1/2z".
std::string to_string(const IntPolynomial& p);

/// Parses the text produced by to_string(): integer or a/b coefficients,
/// optional '*', powers with '^'. Whitespace is ignored.
IntPolynomial parse_polynomial(std::string_view text);

}  // namespace regrange
