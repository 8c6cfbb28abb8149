#include "regrange/hilbert.hpp"

#include <algorithm>
#include <cctype>

#include "regrange/errors.hpp"
#include "regrange/macaulay.hpp"

namespace regrange {

HilbertFunction::HilbertFunction(std::vector<Integer> prefix, IntPolynomial tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  while (!prefix_.empty() && prefix_.back() == tail_(static_cast<std::int64_t>(prefix_.size()) - 1)) {
    prefix_.pop_back();
  }
  for (std::size_t t = 0; t < prefix_.size(); ++t) {
    if (prefix_[t] < 0) {
      throw InvalidInput("negative value " + to_string(prefix_[t]) + " at t=" + std::to_string(t));
    }
  }
  if (tail_.is_zero()) return;
  if (tail_.leading() < 0) throw InvalidInput("polynomial " + to_string(tail_) + " is eventually negative");
  const Integer start = static_cast<long long>(prefix_.size());
  for (Integer t = start; t < tail_.sign_bound(); ++t) {
    if (tail_(t) < 0) {
      throw InvalidInput("negative value " + to_string(tail_(t)) + " at t=" + to_string(t));
    }
  }
}

Integer HilbertFunction::operator()(std::int64_t t) const {
  if (t < 0) throw InvalidInput("Hilbert function evaluated at negative t");
  if (static_cast<std::size_t>(t) < prefix_.size()) return prefix_[static_cast<std::size_t>(t)];
  return tail_(t);
}

HilbertFunction delta(const HilbertFunction& h) {
  if (h(0) != 1) throw InvalidInput("delta requires H(0) = 1");
  const auto s = h.regularity_index();
  std::vector<Integer> values{1};
  for (std::int64_t t = 1; t <= s; ++t) values.push_back(h(t) - h(t - 1));
  return HilbertFunction(std::move(values), h.tail().difference());
}

HilbertFunction sigma(const HilbertFunction& h) {
  if (h(0) != 1) throw InvalidInput("sigma requires H(0) = 1");
  const auto s = h.regularity_index();
  const std::int64_t k = h.tail().degree();
  std::vector<Integer> sums{1};
  for (std::int64_t t = 1; t <= s + k + 1; ++t) sums.push_back(sums.back() + h(t));
  const std::span<const Integer> tail_points(sums.begin() + s, sums.end());
  auto tail = IntPolynomial::interpolate(s, tail_points);
  sums.resize(static_cast<std::size_t>(s));
  return HilbertFunction(std::move(sums), std::move(tail));
}

std::int64_t rho(const HilbertFunction& h) { return h.regularity_index(); }

bool leq(const HilbertFunction& a, const HilbertFunction& b) {
  const IntPolynomial d = b.tail() - a.tail();
  if (d.leading() < 0) return false;
  Integer bound = std::max(a.regularity_index(), b.regularity_index());
  if (!d.is_zero()) bound = std::max(bound, d.sign_bound());
  const auto last = to_int64(bound, "comparison bound");
  for (std::int64_t t = 0; t <= last; ++t) {
    if (a(t) > b(t)) return false;
  }
  return true;
}

bool is_o_sequence(const HilbertFunction& h) {
  if (h(0) != 1) return false;
  std::int64_t last = rho(h) + 1;
  if (!h.tail().is_zero()) {
    // The eventual polynomial of an O-sequence is the Hilbert polynomial of a
    // scheme, so a non-admissible tail settles the question.
    if (!is_admissible(h.tail())) return false;
    last = std::max(rho(h), gotzmann_number(h.tail())) + 1;
  }
  for (std::int64_t t = 1; t <= last; ++t) {
    if (h(t + 1) > growth(h(t), t)) return false;
  }
  return true;
}

bool is_full_ring(const HilbertFunction& h) {
  if (h(0) != 1 || !h.prefix().empty()) return false;
  const Integer n = h(1) - 1;
  if (n < 0 || n > 4096) return false;
  const auto vars = static_cast<std::int64_t>(n);
  return h.tail() == IntPolynomial::shifted_binomial(n, vars);
}

std::int64_t lex_regularity(const HilbertFunction& h) {
  if (is_full_ring(h)) return 0;
  if (h.tail().is_zero()) return rho(h);
  return std::max(rho(h), gotzmann_number(h.tail()));
}

GotzmannDecomposition gotzmann_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidInput("the zero polynomial is not admissible");
  GotzmannDecomposition out;
  IntPolynomial rest = p;
  Integer next = 1;  // index i of the next binomial
  while (!rest.is_zero()) {
    const int k = rest.degree();
    const Integer count = rest.leading();
    if (count <= 0) {
      throw InvalidInput("polynomial " + to_string(p) + " is not admissible");
    }
    // sum_{j=next}^{next+count-1} C(z + k - j + 1, k), by the hockey-stick identity
    const Integer top = Integer(k) - next + 2;
    rest = rest - (IntPolynomial::shifted_binomial(top, k + 1) -
                   IntPolynomial::shifted_binomial(top - count, k + 1));
    out.blocks.push_back({k, count});
    next += count;
  }
  out.length = next - 1;
  return out;
}

std::int64_t gotzmann_number(const IntPolynomial& p) {
  return to_int64(gotzmann_decomposition(p).length, "Gotzmann number");
}

bool is_admissible(const IntPolynomial& p) {
  try {
    gotzmann_decomposition(p);
    return true;
  } catch (const InvalidInput&) {
    return false;
  }
}

HilbertFunction parse_hilbert_function(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  const auto semi = compact.find(';');
  if (semi == std::string::npos) return HilbertFunction(parse_polynomial(compact));
  if (compact.find(';', semi + 1) != std::string::npos) {
    throw InvalidInput("Hilbert function literal has more than one ';'");
  }
  std::vector<Integer> prefix;
  const std::string head = compact.substr(0, semi);
  std::size_t pos = 0;
  while (pos < head.size()) {
    const auto comma = std::min(head.find(',', pos), head.size());
    const std::string item = head.substr(pos, comma - pos);
    const bool digits = !item.empty() && std::all_of(item.begin(), item.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c));
    });
    if (!digits) throw InvalidInput("bad value '" + item + "' in Hilbert function prefix");
    prefix.emplace_back(item);
    pos = comma + 1;
    if (comma + 1 == head.size()) throw InvalidInput("trailing ',' in Hilbert function prefix");
  }
  return HilbertFunction(std::move(prefix), parse_polynomial(compact.substr(semi + 1)));
}

std::string to_literal(const HilbertFunction& h) {
  std::string out;
  for (std::size_t i = 0; i < h.prefix().size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(h.prefix()[i]);
  }
  if (!out.empty()) out += " ; ";
  return out + to_string(h.tail());
}

std::string to_display(const HilbertFunction& h) {
  std::string out = "(";
  for (std::size_t i = 0; i < h.prefix().size(); ++i) out += (i ? "," : "") + to_string(h.prefix()[i]);
  if (!h.prefix().empty()) out += ";";
  return out + to_string(h.tail()) + ")";
}

}  // namespace regrange
