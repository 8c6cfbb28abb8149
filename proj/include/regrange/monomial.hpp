#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "regrange/hilbert.hpp"

namespace regrange {

/// Largest supported index of the top variable x_n.
inline constexpr int kMaxAmbient = 15;

/// Power product x_0^a_0 ... x_n^a_n with x_0 < x_1 < ... < x_n.
class Term {
 public:
  /// The term 1 over x_0..x_n.
  explicit Term(int ambient_n = 0);
  Term(int ambient_n, std::initializer_list<int> exponents);
  static Term from_exponents(const std::vector<int>& exponents);

  int ambient() const { return ambient_; }
  int exponent(int var) const { return exps_[static_cast<std::size_t>(var)]; }
  int degree() const { return degree_; }
  /// Index of the smallest variable with positive exponent; -1 for the term 1.
  int min_variable() const;
  std::vector<int> exponents() const;

  bool divides(const Term& other) const;
  Term times(int var, int power = 1) const;
  /// Replace one x_from by x_to. Requires exponent(from) > 0.
  Term exchanged(int from, int to) const;
  Term without_x0() const;

  friend bool operator==(const Term& a, const Term& b) {
    return a.ambient_ == b.ambient_ && a.exps_ == b.exps_;
  }

 private:
  std::array<std::uint16_t, kMaxAmbient + 1> exps_{};
  int ambient_ = 0;
  int degree_ = 0;
};

/// Degree first; within a degree the larger exponent on the larger variable wins,
/// scanning from x_n down. Throws InvalidInput on ambient mismatch.
std::strong_ordering deglex_cmp(const Term& a, const Term& b);

struct DeglexGreater {
  bool operator()(const Term& a, const Term& b) const { return deglex_cmp(a, b) > 0; }
};

/// "x3^2*x1"; "1" for the unit term.
std::string to_string(const Term& t);

/// Number of terms of degree d in `vars` variables.
Integer count_terms(std::int64_t degree, int vars);

/// Visits the degree-d terms in x_first..x_last in descending deglex order until
/// `visit` returns false.
void for_each_term_desc(int degree, int first, int last, int ambient_n,
                        const std::function<bool(const Term&)>& visit);
/// The `count` deglex-greatest degree-d terms in x_first..x_last.
std::vector<Term> top_terms(int degree, int first, int last, int ambient_n, std::size_t count);

/// Degree-homogeneous set of terms over x_first..x_n (first is 0 or 1),
/// kept sorted in descending deglex order without duplicates.
class BorelSet {
 public:
  BorelSet(int degree, int ambient_n, int first_var = 0);
  BorelSet(int degree, int ambient_n, int first_var, std::vector<Term> terms);

  int degree() const { return degree_; }
  int ambient() const { return ambient_; }
  int first_var() const { return first_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  bool contains(const Term& t) const;

  friend bool operator==(const BorelSet&, const BorelSet&) = default;

 private:
  int degree_;
  int ambient_;
  int first_;
  std::vector<Term> terms_;
};

/// Closure under increasing exchanges x_i -> x_j, j > i.
bool is_borel(const BorelSet& b);
/// All products of members with one variable of the ring.
BorelSet expand(const BorelSet& b);
/// Every degree-d term of the ring.
BorelSet full_degree(int degree, int ambient_n, int first_var = 0);

/// Monomial ideal over x_first..x_n given by its minimal generators.
/// Generators are ordered by increasing degree, and by descending deglex within a degree.
class MonomialIdeal {
 public:
  MonomialIdeal(int ambient_n, int first_var, std::vector<Term> generators);

  int ambient() const { return ambient_; }
  int first_var() const { return first_; }
  int variable_count() const { return ambient_ - first_ + 1; }
  const std::vector<Term>& generators() const { return gens_; }
  bool contains(const Term& t) const;
  int max_generator_degree() const;
  /// The same generators read in x_1..x_n. Requires no generator to involve x_0.
  MonomialIdeal as_x0_free() const;
  /// The same generators read in x_0..x_n.
  MonomialIdeal extended_to_x0() const;
  /// The degree-d component as a term set.
  BorelSet component(int degree) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int ambient_;
  int first_;
  std::vector<Term> gens_;
};

/// "x3^2, x3*x2, x2^3"; "0" for the zero ideal.
std::string to_string(const MonomialIdeal& ideal);

/// Terms not in the expansion of the previous degree. Degrees must be consecutive and
/// satisfy expand(B_t) within B_{t+1}; throws InvalidInput otherwise.
MonomialIdeal minimal_generators(const std::map<int, BorelSet>& degreewise);

/// lex(H) over x_first..x_n. Throws InvalidInput for a non-O-sequence or
/// when H needs more variables.
MonomialIdeal lex_ideal(const HilbertFunction& h, int ambient_n, int first_var = 0);

bool is_strongly_stable(const MonomialIdeal& j);
/// Saturation of a strongly stable ideal: generators divided by their x_0 power.
MonomialIdeal saturate_ss(const MonomialIdeal& j);
/// Hilbert function of the quotient by a strongly stable ideal.
HilbertFunction hf_quotient(const MonomialIdeal& j);
/// Castelnuovo-Mumford regularity of a strongly stable ideal (0 for the zero ideal).
std::int64_t reg_ss(const MonomialIdeal& j);

}  // namespace regrange
