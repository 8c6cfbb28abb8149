#include "regrange/integer.hpp"

#include <limits>

#include "regrange/errors.hpp"

namespace regrange {

Integer binomial(const Integer& n, std::int64_t m) {
  if (m < 0 || n < m) return 0;
  if (m == 0) return 1;
  // Use the shorter product when n fits comfortably.
  if (n <= Integer(std::numeric_limits<std::int64_t>::max()) && n - m < m) {
    m = static_cast<std::int64_t>(n - m);
  }
  Integer result = 1;
  for (std::int64_t j = 1; j <= m; ++j) {
    result *= n - m + j;
    result /= j;
  }
  return result;
}

Integer binomial(std::int64_t n, std::int64_t m) { return binomial(Integer(n), m); }

Integer binomial_poly(const Integer& z, std::int64_t i) {
  if (i < 0) return 0;
  if (z >= 0) return binomial(z, i);
  // z(z-1)...(z-i+1)/i! with z < 0 equals (-1)^i C(i - z - 1, i).
  Integer magnitude = binomial(Integer(i) - z - 1, i);
  return (i % 2 == 0) ? magnitude : Integer(-magnitude);
}

std::int64_t to_int64(const Integer& value, const char* what) {
  if (value > Integer(std::numeric_limits<std::int64_t>::max()) ||
      value < Integer(std::numeric_limits<std::int64_t>::min())) {
    throw InvalidInput(std::string(what) + " does not fit in 64 bits: " + to_string(value));
  }
  return static_cast<std::int64_t>(value);
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace regrange
