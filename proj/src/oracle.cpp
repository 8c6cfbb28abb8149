#include "regrange/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <set>
#include <thread>

#include "regrange/construct.hpp"
#include "regrange/errors.hpp"

namespace regrange {

std::uint64_t default_enumeration_cap() {
  constexpr std::uint64_t kFallback = 5000;
  const char* env = std::getenv("REGRANGE_ENUM_CAP");
  if (env == nullptr || *env == '\0') return kFallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') return kFallback;
  return value;
}

namespace {

// A partial search state: the ideal of x1..xn fixed through `degree`.
struct State {
  int degree;
  BorelSet component;
  std::vector<Term> generators;
};

class Search {
 public:
  Search(const HilbertFunction& u, int n, std::int64_t top)
      : u_(u), delta_u_(delta(u)), n_(n), top_(static_cast<int>(top)) {}

  State root() const { return State{0, BorelSet(0, n_, 1), {}}; }

  // All states one degree further.
  std::vector<State> children(const State& s) const {
    std::vector<State> out;
    const int t = s.degree + 1;
    const BorelSet forced = expand(s.component);
    const Integer need_total = count_terms(t, n_) - delta_u_(t);
    if (need_total < static_cast<long long>(forced.size())) return out;
    const auto extra = static_cast<std::size_t>(to_int64(need_total, "component size")) - forced.size();

    std::vector<Term> candidates;
    for_each_term_desc(t, 1, n_, n_, [&](const Term& term) {
      if (!forced.contains(term)) candidates.push_back(term);
      return true;
    });
    std::vector<Term> chosen;
    choose(forced, candidates, 0, extra, chosen, [&]() {
      std::vector<Term> terms = forced.terms();
      terms.insert(terms.end(), chosen.begin(), chosen.end());
      std::vector<Term> gens = s.generators;
      gens.insert(gens.end(), chosen.begin(), chosen.end());
      out.push_back(State{t, BorelSet(t, n_, 1, std::move(terms)), std::move(gens)});
    });
    return out;
  }

  void run(const State& s, std::vector<MonomialIdeal>& found, std::uint64_t& rejected) const {
    if (s.degree >= top_) {
      finish(s, found, rejected);
      return;
    }
    for (const auto& child : children(s)) run(child, found, rejected);
  }

  int top() const { return top_; }

 private:
  // Picks `extra` candidates so that every adjacent upward exchange of a pick is present.
  template <class Emit>
  void choose(const BorelSet& forced, const std::vector<Term>& candidates, std::size_t idx, std::size_t extra,
              std::vector<Term>& chosen, Emit&& emit) const {
    if (extra == 0) {
      emit();
      return;
    }
    if (candidates.size() - idx < extra) return;
    const Term& term = candidates[idx];
    if (covers_present(term, forced, chosen)) {
      chosen.push_back(term);
      choose(forced, candidates, idx + 1, extra - 1, chosen, emit);
      chosen.pop_back();
    }
    choose(forced, candidates, idx + 1, extra, chosen, emit);
  }

  bool covers_present(const Term& term, const BorelSet& forced, const std::vector<Term>& chosen) const {
    for (int i = 1; i < n_; ++i) {
      if (term.exponent(i) == 0) continue;
      const Term up = term.exchanged(i, i + 1);
      if (!forced.contains(up) && std::find(chosen.begin(), chosen.end(), up) == chosen.end()) return false;
    }
    return true;
  }

  void finish(const State& s, std::vector<MonomialIdeal>& found, std::uint64_t& rejected) const {
    const MonomialIdeal inner(n_, 1, s.generators);
    if (!(hf_quotient(inner) == delta_u_)) {
      ++rejected;
      return;
    }
    MonomialIdeal ideal = inner.extended_to_x0();
    if (!is_strongly_stable(ideal) || !(hf_quotient(ideal) == u_)) {
      throw CertificationError("enumerated ideal (" + to_string(ideal) + ") fails its own checks");
    }
    found.push_back(std::move(ideal));
  }

  const HilbertFunction& u_;
  HilbertFunction delta_u_;
  int n_;
  int top_;
};

bool ideal_key_less(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<std::vector<int>> ka;
  std::vector<std::vector<int>> kb;
  for (const auto& g : a.generators()) ka.push_back(g.exponents());
  for (const auto& g : b.generators()) kb.push_back(g.exponents());
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka < kb;
}

}  // namespace

Enumeration enumerate_saturated_ss(const HilbertFunction& u, int ambient_n, const EnumerationOptions& opts) {
  const RegularityRange range = regularity_range(u, ambient_n);
  const Integer size = binomial(range.max_reg + ambient_n, ambient_n);
  if (size > opts.cap) {
    throw CapExceeded("enumeration needs C(" + std::to_string(range.max_reg + ambient_n) + "," +
                      std::to_string(ambient_n) + ") = " + to_string(size) + " terms, cap is " +
                      std::to_string(opts.cap));
  }

  Enumeration result;
  if (ambient_n == 0) {
    result.ideals.emplace_back(0, 0, std::vector<Term>{});
    return result;
  }
  const Search search(u, ambient_n, range.max_reg);
  const unsigned threads = std::max(1u, opts.threads);

  std::vector<State> frontier{search.root()};
  while (threads > 1 && frontier.size() < 4 * static_cast<std::size_t>(threads) &&
         frontier.front().degree < search.top()) {
    std::vector<State> next;
    for (const auto& s : frontier) {
      for (auto& c : search.children(s)) next.push_back(std::move(c));
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }

  std::vector<std::vector<MonomialIdeal>> found(frontier.size());
  std::vector<std::uint64_t> rejected(frontier.size(), 0);
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) {
      try {
        search.run(frontier[i], found[i], rejected[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (auto& ideal : found[i]) result.ideals.push_back(std::move(ideal));
    result.rejected_tail += rejected[i];
  }
  std::sort(result.ideals.begin(), result.ideals.end(), ideal_key_less);
  result.ideals.erase(std::unique(result.ideals.begin(), result.ideals.end()), result.ideals.end());
  return result;
}

std::vector<std::int64_t> regularity_spectrum(const HilbertFunction& u, int ambient_n,
                                              const EnumerationOptions& opts) {
  std::set<std::int64_t> regs;
  for (const auto& ideal : enumerate_saturated_ss(u, ambient_n, opts).ideals) regs.insert(reg_ss(ideal));
  return {regs.begin(), regs.end()};
}

MainTheoremReport verify_main_theorem(const HilbertFunction& u, int ambient_n, const EnumerationOptions& opts) {
  MainTheoremReport report;
  report.u = u;
  report.ambient = ambient_n;
  report.range = regularity_range(u, ambient_n);
  const Enumeration enumeration = enumerate_saturated_ss(u, ambient_n, opts);
  report.rejected_tail = enumeration.rejected_tail;

  std::set<std::int64_t> regs;
  for (const auto& ideal : enumeration.ideals) {
    const auto r = reg_ss(ideal);
    regs.insert(r);
    ++report.count_by_regularity[r];
    for (const auto& g : ideal.generators()) {
      if (g.exponent(0) != 0 && report.failure.empty()) {
        report.failure = "enumerated ideal (" + to_string(ideal) + ") is not saturated";
      }
    }
  }
  report.spectrum.assign(regs.begin(), regs.end());

  std::vector<std::int64_t> expected;
  for (auto m = report.range.min_reg; m <= report.range.max_reg; ++m) expected.push_back(m);
  if (report.failure.empty() && report.spectrum != expected) {
    std::string got;
    for (auto r : report.spectrum) got += (got.empty() ? "" : ",") + std::to_string(r);
    report.failure = "spectrum {" + got + "} differs from [" + std::to_string(report.range.min_reg) + "," +
                     std::to_string(report.range.max_reg) + "]";
  }
  for (auto m : expected) {
    MonomialIdeal witness = construct_scheme_ideal(u, m, ambient_n).ideal;
    const bool present =
        std::find(enumeration.ideals.begin(), enumeration.ideals.end(), witness) != enumeration.ideals.end();
    if (!present && report.failure.empty()) {
      report.failure = "witness (" + to_string(witness) + ") for m = " + std::to_string(m) +
                       " is missing from the enumeration";
    }
    report.witnesses.emplace_back(m, std::move(witness));
  }
  report.pass = report.failure.empty();
  return report;
}

}  // namespace regrange
