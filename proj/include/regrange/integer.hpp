#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace regrange {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient with the combinatorial null convention:
/// zero when n < m or m < 0, one when m == 0 <= n.
Integer binomial(const Integer& n, std::int64_t m);
Integer binomial(std::int64_t n, std::int64_t m);

/// Polynomial binomial z(z-1)...(z-i+1)/i!, defined for every integer z.
/// Agrees with binomial() for z >= 0.
Integer binomial_poly(const Integer& z, std::int64_t i);

/// Narrowing with a range check; `what` names the quantity in the error.
std::int64_t to_int64(const Integer& value, const char* what);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

}  // namespace regrange
