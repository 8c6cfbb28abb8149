#include "regrange/monomial.hpp"

#include <algorithm>

#include "regrange/errors.hpp"

namespace regrange {

namespace {

void check_ambient(int ambient_n) {
  if (ambient_n < 0 || ambient_n > kMaxAmbient) {
    throw InvalidInput("ambient index must lie in [0, " + std::to_string(kMaxAmbient) + "], got " +
                       std::to_string(ambient_n));
  }
}

void check_first(int first_var) {
  if (first_var != 0 && first_var != 1) throw InvalidInput("first variable must be x0 or x1");
}

void check_member(const Term& t, int ambient_n, int first_var) {
  if (t.ambient() != ambient_n) throw InvalidInput("term " + to_string(t) + " has the wrong ambient");
  for (int v = 0; v < first_var; ++v) {
    if (t.exponent(v) != 0) throw InvalidInput("term " + to_string(t) + " uses a variable outside the ring");
  }
}

void sort_unique(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), DeglexGreater{});
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
}

}  // namespace

Term::Term(int ambient_n) : ambient_(ambient_n) { check_ambient(ambient_n); }

Term::Term(int ambient_n, std::initializer_list<int> exponents) : Term(ambient_n) {
  if (static_cast<int>(exponents.size()) != ambient_n + 1) {
    throw InvalidInput("term needs " + std::to_string(ambient_n + 1) + " exponents");
  }
  std::size_t v = 0;
  for (int e : exponents) {
    if (e < 0 || e > 0xFFFF) throw InvalidInput("exponent out of range");
    exps_[v++] = static_cast<std::uint16_t>(e);
    degree_ += e;
  }
}

Term Term::from_exponents(const std::vector<int>& exponents) {
  if (exponents.empty()) throw InvalidInput("term needs at least one exponent");
  Term t(static_cast<int>(exponents.size()) - 1);
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    if (exponents[v] < 0 || exponents[v] > 0xFFFF) throw InvalidInput("exponent out of range");
    t.exps_[v] = static_cast<std::uint16_t>(exponents[v]);
    t.degree_ += exponents[v];
  }
  return t;
}

int Term::min_variable() const {
  for (int v = 0; v <= ambient_; ++v) {
    if (exps_[static_cast<std::size_t>(v)] > 0) return v;
  }
  return -1;
}

std::vector<int> Term::exponents() const {
  return std::vector<int>(exps_.begin(), exps_.begin() + ambient_ + 1);
}

bool Term::divides(const Term& other) const {
  for (int v = 0; v <= ambient_; ++v) {
    if (exps_[static_cast<std::size_t>(v)] > other.exps_[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

Term Term::times(int var, int power) const {
  Term out = *this;
  out.exps_[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(out.exps_[static_cast<std::size_t>(var)] + power);
  out.degree_ += power;
  return out;
}

Term Term::exchanged(int from, int to) const {
  Term out = *this;
  --out.exps_[static_cast<std::size_t>(from)];
  ++out.exps_[static_cast<std::size_t>(to)];
  return out;
}

Term Term::without_x0() const {
  Term out = *this;
  out.degree_ -= out.exps_[0];
  out.exps_[0] = 0;
  return out;
}

std::strong_ordering deglex_cmp(const Term& a, const Term& b) {
  if (a.ambient() != b.ambient()) throw InvalidInput("deglex_cmp: ambient mismatch");
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int v = a.ambient(); v >= 0; --v) {
    if (auto c = a.exponent(v) <=> b.exponent(v); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Term& t) {
  std::string out;
  for (int v = t.ambient(); v >= 0; --v) {
    const int e = t.exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

Integer count_terms(std::int64_t degree, int vars) {
  if (degree < 0) return 0;
  if (vars <= 0) return degree == 0 ? 1 : 0;
  return binomial(degree + vars - 1, vars - 1);
}

void for_each_term_desc(int degree, int first, int last, int ambient_n,
                        const std::function<bool(const Term&)>& visit) {
  check_ambient(ambient_n);
  if (degree < 0) return;
  if (first > last) {
    if (degree == 0) visit(Term(ambient_n));
    return;
  }
  std::vector<int> exps(static_cast<std::size_t>(ambient_n) + 1, 0);
  bool stopped = false;
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == first) {
      exps[static_cast<std::size_t>(var)] = remaining;
      if (!visit(Term::from_exponents(exps))) stopped = true;
      return;
    }
    for (int e = remaining; e >= 0 && !stopped; --e) {
      exps[static_cast<std::size_t>(var)] = e;
      self(self, var - 1, remaining - e);
    }
    exps[static_cast<std::size_t>(var)] = 0;
  };
  rec(rec, last, degree);
}

std::vector<Term> top_terms(int degree, int first, int last, int ambient_n, std::size_t count) {
  std::vector<Term> out;
  if (count == 0) return out;
  out.reserve(count);
  for_each_term_desc(degree, first, last, ambient_n, [&](const Term& t) {
    out.push_back(t);
    return out.size() < count;
  });
  if (out.size() < count) {
    throw InvalidInput("only " + std::to_string(out.size()) + " terms of degree " + std::to_string(degree) +
                       " available, " + std::to_string(count) + " requested");
  }
  return out;
}

BorelSet::BorelSet(int degree, int ambient_n, int first_var)
    : degree_(degree), ambient_(ambient_n), first_(first_var) {
  check_ambient(ambient_n);
  check_first(first_var);
}

BorelSet::BorelSet(int degree, int ambient_n, int first_var, std::vector<Term> terms)
    : BorelSet(degree, ambient_n, first_var) {
  for (const auto& t : terms) {
    check_member(t, ambient_n, first_var);
    if (t.degree() != degree) throw InvalidInput("term " + to_string(t) + " has the wrong degree");
  }
  sort_unique(terms);
  terms_ = std::move(terms);
}

bool BorelSet::contains(const Term& t) const {
  return std::binary_search(terms_.begin(), terms_.end(), t, DeglexGreater{});
}

bool is_borel(const BorelSet& b) {
  for (const auto& t : b.terms()) {
    for (int i = b.first_var(); i < b.ambient(); ++i) {
      if (t.exponent(i) == 0) continue;
      for (int j = i + 1; j <= b.ambient(); ++j) {
        if (!b.contains(t.exchanged(i, j))) return false;
      }
    }
  }
  return true;
}

BorelSet expand(const BorelSet& b) {
  std::vector<Term> out;
  out.reserve(b.size() * static_cast<std::size_t>(b.ambient() - b.first_var() + 1));
  for (const auto& t : b.terms()) {
    for (int v = b.first_var(); v <= b.ambient(); ++v) out.push_back(t.times(v));
  }
  return BorelSet(b.degree() + 1, b.ambient(), b.first_var(), std::move(out));
}

BorelSet full_degree(int degree, int ambient_n, int first_var) {
  std::vector<Term> out;
  for_each_term_desc(degree, first_var, ambient_n, ambient_n, [&](const Term& t) {
    out.push_back(t);
    return true;
  });
  return BorelSet(degree, ambient_n, first_var, std::move(out));
}

MonomialIdeal::MonomialIdeal(int ambient_n, int first_var, std::vector<Term> generators)
    : ambient_(ambient_n), first_(first_var) {
  check_ambient(ambient_n);
  check_first(first_var);
  for (const auto& g : generators) check_member(g, ambient_n, first_var);
  std::sort(generators.begin(), generators.end(), [](const Term& a, const Term& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return deglex_cmp(a, b) > 0;
  });
  for (const auto& g : generators) {
    const bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Term& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(g);
  }
}

bool MonomialIdeal::contains(const Term& t) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Term& g) { return g.divides(t); });
}

int MonomialIdeal::max_generator_degree() const {
  int out = 0;
  for (const auto& g : gens_) out = std::max(out, g.degree());
  return out;
}

MonomialIdeal MonomialIdeal::as_x0_free() const {
  for (const auto& g : gens_) {
    if (g.exponent(0) != 0) throw InvalidInput("generator " + to_string(g) + " involves x0");
  }
  return MonomialIdeal(ambient_, 1, gens_);
}

MonomialIdeal MonomialIdeal::extended_to_x0() const { return MonomialIdeal(ambient_, 0, gens_); }

BorelSet MonomialIdeal::component(int degree) const {
  std::vector<Term> out;
  for_each_term_desc(degree, first_, ambient_, ambient_, [&](const Term& t) {
    if (contains(t)) out.push_back(t);
    return true;
  });
  return BorelSet(degree, ambient_, first_, std::move(out));
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.generators().empty()) return "0";
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += to_string(g);
  }
  return out;
}

MonomialIdeal minimal_generators(const std::map<int, BorelSet>& degreewise) {
  if (degreewise.empty()) throw InvalidInput("minimal_generators: no degrees given");
  const auto& front = degreewise.begin()->second;
  std::vector<Term> gens;
  const BorelSet* previous = nullptr;
  for (const auto& [degree, set] : degreewise) {
    if (set.ambient() != front.ambient() || set.first_var() != front.first_var() || set.degree() != degree) {
      throw InvalidInput("minimal_generators: inconsistent degree " + std::to_string(degree));
    }
    if (previous == nullptr) {
      gens.insert(gens.end(), set.terms().begin(), set.terms().end());
    } else {
      if (previous->degree() + 1 != degree) throw InvalidInput("minimal_generators: degrees must be consecutive");
      const BorelSet expanded = expand(*previous);
      for (const auto& t : expanded.terms()) {
        if (!set.contains(t)) {
          throw InvalidInput("minimal_generators: " + to_string(t) + " is missing from degree " +
                             std::to_string(degree));
        }
      }
      for (const auto& t : set.terms()) {
        if (!expanded.contains(t)) gens.push_back(t);
      }
    }
    previous = &set;
  }
  return MonomialIdeal(front.ambient(), front.first_var(), std::move(gens));
}

MonomialIdeal lex_ideal(const HilbertFunction& h, int ambient_n, int first_var) {
  check_ambient(ambient_n);
  check_first(first_var);
  const int vars = ambient_n - first_var + 1;
  if (vars < 1) throw InvalidInput("lex_ideal needs at least one variable");
  if (!is_o_sequence(h)) throw InvalidInput(to_display(h) + " is not an O-sequence");
  if (h(1) > vars) {
    throw InvalidInput(to_display(h) + " needs " + to_string(h(1)) + " variables, only " +
                       std::to_string(vars) + " available");
  }
  const std::int64_t last = std::max<std::int64_t>(lex_regularity(h), 1);
  std::vector<Term> gens;
  BorelSet previous(0, ambient_n, first_var);
  for (int t = 1; t <= last; ++t) {
    const Integer need = count_terms(t, vars) - h(t);
    if (need < 0) {
      throw InvalidInput(to_display(h) + " exceeds the number of degree-" + std::to_string(t) + " terms");
    }
    BorelSet current(t, ambient_n, first_var,
                     top_terms(t, first_var, ambient_n, ambient_n,
                               static_cast<std::size_t>(to_int64(need, "lex segment size"))));
    const BorelSet expanded = expand(previous);
    for (const auto& term : expanded.terms()) {
      if (!current.contains(term)) {
        throw CertificationError("lex segment of degree " + std::to_string(t) + " misses " + to_string(term));
      }
    }
    for (const auto& term : current.terms()) {
      if (!expanded.contains(term)) gens.push_back(term);
    }
    previous = std::move(current);
  }
  return MonomialIdeal(ambient_n, first_var, std::move(gens));
}

bool is_strongly_stable(const MonomialIdeal& j) {
  for (const auto& g : j.generators()) {
    for (int i = j.first_var(); i < j.ambient(); ++i) {
      if (g.exponent(i) == 0) continue;
      for (int k = i + 1; k <= j.ambient(); ++k) {
        if (!j.contains(g.exchanged(i, k))) return false;
      }
    }
  }
  return true;
}

namespace {

void require_strongly_stable(const MonomialIdeal& j, const char* op) {
  if (!is_strongly_stable(j)) throw InvalidInput(std::string(op) + ": ideal (" + to_string(j) + ") is not strongly stable");
}

}  // namespace

MonomialIdeal saturate_ss(const MonomialIdeal& j) {
  require_strongly_stable(j, "saturate_ss");
  std::vector<Term> gens;
  gens.reserve(j.generators().size());
  for (const auto& g : j.generators()) gens.push_back(g.without_x0());
  return MonomialIdeal(j.ambient(), j.first_var(), std::move(gens));
}

HilbertFunction hf_quotient(const MonomialIdeal& j) {
  require_strongly_stable(j, "hf_quotient");
  const int vars = j.variable_count();
  const int top = j.max_generator_degree();
  const int last = top + vars;
  std::vector<Integer> values;
  values.reserve(static_cast<std::size_t>(last) + 1);
  BorelSet current(0, j.ambient(), j.first_var());
  for (int t = 0; t <= last; ++t) {
    std::vector<Term> terms;
    if (t > 0) terms = expand(current).terms();
    for (const auto& g : j.generators()) {
      if (g.degree() == t) terms.push_back(g);
    }
    current = BorelSet(t, j.ambient(), j.first_var(), std::move(terms));
    values.push_back(count_terms(t, vars) - static_cast<long long>(current.size()));
  }
  const std::span<const Integer> window(values.begin() + top, values.begin() + top + vars);
  auto tail = IntPolynomial::interpolate(top, window);
  if (tail(last) != values.back()) {
    throw CertificationError("Hilbert polynomial of (" + to_string(j) + ") failed verification");
  }
  return HilbertFunction(std::move(values), std::move(tail));
}

std::int64_t reg_ss(const MonomialIdeal& j) {
  require_strongly_stable(j, "reg_ss");
  return j.max_generator_degree();
}

}  // namespace regrange
