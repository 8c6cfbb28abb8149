#include "regrange/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "regrange/errors.hpp"

namespace regrange {

IntPolynomial::IntPolynomial(std::vector<Integer> binomial_coeffs) : coeffs_(std::move(binomial_coeffs)) {
  strip();
}

void IntPolynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::shifted_binomial(const Integer& shift, std::int64_t k) {
  std::vector<Integer> values;
  values.reserve(static_cast<std::size_t>(k + 1));
  for (std::int64_t z = 0; z <= k; ++z) values.push_back(binomial_poly(shift + z, k));
  return interpolate(0, values);
}

IntPolynomial IntPolynomial::interpolate(const Integer& start, std::span<const Integer> values) {
  // Newton forward differences at `start`.
  std::vector<Integer> diffs(values.begin(), values.end());
  const std::size_t n = diffs.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t j = n - 1; j >= level; --j) diffs[j] -= diffs[j - 1];
  }
  if (start == 0) return IntPolynomial(std::move(diffs));
  // Rebase: evaluate sum_i d_i C(z - start, i) at z = 0..n-1, then difference again.
  std::vector<Integer> at_zero(n);
  for (std::size_t z = 0; z < n; ++z) {
    Integer sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      sum += diffs[i] * binomial_poly(Integer(z) - start, static_cast<std::int64_t>(i));
    }
    at_zero[z] = std::move(sum);
  }
  return interpolate(0, at_zero);
}

IntPolynomial IntPolynomial::from_power_basis(std::span<const Rational> coeffs) {
  std::vector<Integer> values;
  for (std::size_t z = 0; z < std::max<std::size_t>(coeffs.size(), 1); ++z) {
    Rational value = 0;
    Rational power = 1;
    for (const auto& c : coeffs) {
      value += c * power;
      power *= static_cast<long long>(z);
    }
    if (denominator(value) != 1) {
      throw InvalidInput("polynomial is not integer-valued: value " + to_string(value) +
                         " at z=" + std::to_string(z));
    }
    values.push_back(numerator(value));
  }
  return interpolate(0, values);
}

Integer IntPolynomial::leading() const { return coeffs_.empty() ? Integer(0) : coeffs_.back(); }

Integer IntPolynomial::operator()(const Integer& z) const {
  Integer sum = 0;
  Integer basis = 1;  // C(z, i)
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) {
      basis *= z - static_cast<long long>(i) + 1;
      basis /= static_cast<long long>(i);
    }
    sum += coeffs_[i] * basis;
  }
  return sum;
}

IntPolynomial IntPolynomial::difference() const {
  if (coeffs_.empty()) return {};
  std::vector<Integer> values;
  for (std::int64_t z = 0; z <= degree(); ++z) values.push_back((*this)(z) - (*this)(z - 1));
  return interpolate(0, values);
}

std::vector<Rational> IntPolynomial::power_basis() const {
  std::vector<Rational> out(coeffs_.size());
  std::vector<Integer> falling{1};  // z(z-1)...(z-i+1) in the power basis
  Integer factorial = 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) {
      std::vector<Integer> next(falling.size() + 1);
      const Integer shift = static_cast<long long>(i) - 1;
      for (std::size_t j = 0; j < falling.size(); ++j) {
        next[j + 1] += falling[j];
        next[j] -= falling[j] * shift;
      }
      falling = std::move(next);
      factorial *= static_cast<long long>(i);
    }
    for (std::size_t j = 0; j < falling.size(); ++j) {
      out[j] += Rational(coeffs_[i] * falling[j], factorial);
    }
  }
  return out;
}

Integer IntPolynomial::sign_bound() const {
  if (degree() <= 0) return 0;
  const auto power = power_basis();
  const Rational lead = abs(power.back());
  Rational worst = 0;
  for (std::size_t i = 0; i + 1 < power.size(); ++i) worst = std::max(worst, Rational(abs(power[i]) / lead));
  // Every real root has |x| < 1 + worst.
  return numerator(worst) / denominator(worst) + 2;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  const auto power = p.power_basis();
  std::string out;
  for (std::size_t d = power.size(); d-- > 0;) {
    const Rational& c = power[d];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (d == 0 || magnitude != 1) out += to_string(magnitude);
    if (d >= 1) out += 'z';
    if (d >= 2) out += '^' + std::to_string(d);
  }
  return out;
}

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string text) : s_(std::move(text)) {}

  IntPolynomial parse() {
    if (s_.empty()) fail("empty polynomial");
    std::map<std::size_t, Rational> terms;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (s_[pos_++] == '-') ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coef, power] = term();
      terms[power] += coef * sign;
    }
    const std::size_t top = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<Rational> coeffs(top + 1);
    for (const auto& [power, coef] : terms) coeffs[power] = coef;
    return IntPolynomial::from_power_basis(coeffs);
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("cannot parse polynomial '" + s_ + "': " + what + " at offset " +
                       std::to_string(pos_));
  }

  Integer number() {
    const std::size_t begin = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (begin == pos_) fail("expected a number");
    return Integer(s_.substr(begin, pos_ - begin));
  }

  std::pair<Rational, std::size_t> term() {
    Rational coef = 1;
    bool has_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      has_coef = true;
      Integer num = number();
      Integer den = 1;
      if (peek() == '/') {
        ++pos_;
        den = number();
        if (den == 0) fail("zero denominator");
      }
      coef = Rational(num, den);
      if (peek() == '*') ++pos_;
    }
    if (peek() != 'z') {
      if (!has_coef) fail("expected a coefficient or z");
      return {coef, 0};
    }
    ++pos_;
    std::size_t power = 1;
    if (peek() == '^') {
      ++pos_;
      power = static_cast<std::size_t>(to_int64(number(), "exponent"));
      if (power > 64) fail("exponent too large");
    }
    return {coef, power};
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  return PolynomialParser(std::move(compact)).parse();
}

}  // namespace regrange
