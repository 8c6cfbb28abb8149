#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "regrange/borelvec.hpp"
#include "regrange/errors.hpp"
#include "regrange/selfcheck.hpp"

using namespace regrange;

namespace {

Term t3(std::initializer_list<int> e) { return Term(3, e); }

BorelSet ghl_m3() {
  return BorelSet(3, 3, 0,
                  {t3({0, 0, 0, 3}), t3({0, 0, 1, 2}), t3({0, 0, 2, 1}), t3({0, 0, 3, 0}), t3({0, 1, 0, 2}),
                   t3({0, 1, 1, 1}), t3({1, 0, 0, 2}), t3({1, 0, 1, 1})});
}

using I64 = std::vector<std::int64_t>;

// Every Borel subset of T_t over x0..xn, by include/exclude over terms in descending order.
std::vector<BorelSet> all_borel_sets(int t, int n) {
  std::vector<Term> terms = full_degree(t, n, 0).terms();
  std::vector<BorelSet> out;
  std::vector<Term> chosen;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == terms.size()) {
      out.emplace_back(t, n, 0, chosen);
      return;
    }
    const Term& term = terms[idx];
    bool covers = true;
    for (int i = 0; i < n && covers; ++i) {
      if (term.exponent(i) == 0) continue;
      covers = std::find(chosen.begin(), chosen.end(), term.exchanged(i, i + 1)) != chosen.end();
    }
    if (covers) {
      chosen.push_back(term);
      self(self, idx + 1);
      chosen.pop_back();
    }
    self(self, idx + 1);
  };
  rec(rec, 0);
  return out;
}

Integer bareiss_det(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

TEST_CASE("vectors of Borel sets") {
  const auto vp = vectors_of(ghl_m3());
  CHECK(vp.hv == I64{6, 2, 0, 0});
  CHECK(vp.gv == I64{2, 2, 3, 1});
  const auto empty = vectors_of(BorelSet(3, 3, 0));
  CHECK(empty.hv == I64{0, 0, 0, 0});
  CHECK(empty.gv == I64{0, 0, 0, 0});
  const auto full = vectors_of(full_degree(2, 2, 0));
  CHECK(full.hv == I64{3, 2, 1});
  CHECK(full.gv == I64{3, 2, 1});
  CHECK_THROWS_AS(vectors_of(BorelSet(3, 3, 0, {t3({0, 1, 1, 1})})), NotBorel);
}

TEST_CASE("height vectors from a Hilbert function") {
  const auto u = parse_hilbert_function("1;4z");
  CHECK(hv_from(u, 3, 3) == I64{6, 2, 0, 0});
  CHECK(hv_from(u, 4, 3) == I64{11, 6, 2, 0, 0});
  const auto full = parse_hilbert_function("1/6z^3+z^2+11/6z+1");
  for (int m = 0; m <= 5; ++m) CHECK(hv_from(full, m, 3) == I64(static_cast<std::size_t>(m) + 1, 0));
  CHECK_THROWS_AS(hv_from(parse_hilbert_function("1,4;7z"), 3, 2), InfeasibleVectors);
}

TEST_CASE("growth vectors from a polynomial") {
  const auto p = parse_polynomial("4z");
  CHECK(gv_from(p, 3, 3) == I64{2, 2, 3, 1});
  CHECK(gv_from(p, 4, 3) == I64{8, 6, 4, 1});
  CHECK(gv_from(parse_polynomial("1/6z^3+z^2+11/6z+1"), 4, 3) == I64{0, 0, 0, 0});
  CHECK_THROWS_AS(gv_from(parse_polynomial("5z-3"), 1, 3), InfeasibleVectors);
}

TEST_CASE("the symmetric Pascal matrix is unimodular") {
  for (std::size_t size = 1; size <= 12; ++size) {
    std::vector<std::vector<Integer>> a(size, std::vector<Integer>(size));
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t k = 0; k < size; ++k) a[i][k] = oracle::pascal_binomial(static_cast<std::int64_t>(i + k), k);
    }
    const Integer det = bareiss_det(a);
    CHECK((det == 1 || det == -1));
  }
}

TEST_CASE("growth-height-lexicographic construction") {
  CHECK(ghl_construct(VectorPair{{6, 2, 0, 0}, {2, 2, 3, 1}, 3, 3}) == ghl_m3());
  CHECK(ghl_construct(VectorPair{{0, 0, 0, 0}, {0, 0, 0, 0}, 3, 3}).empty());
  const auto l4 = ghl_construct(VectorPair{{11, 6, 2, 0, 0}, {8, 6, 4, 1}, 4, 3});
  CHECK(l4.size() == 19);  // 11+6+2 = 8+6+4+1
  CHECK(to_string(saturate_ss(MonomialIdeal(3, 0, l4.terms()))) == "x3^2, x3*x2, x3*x1^2, x2^4");
  CHECK_THROWS_AS(ghl_construct(VectorPair{{6, 2, 0}, {2, 2, 3, 1}, 3, 3}), InfeasibleVectors);
  CHECK_THROWS_AS(ghl_construct(VectorPair{{6, 3, 0, 0}, {2, 2, 3, 1}, 3, 3}), InfeasibleVectors);
  CHECK_THROWS_AS(ghl_construct(VectorPair{{1, 0, 0}, {0, 1, 0}, 2, 2}), NotBorel);
}

TEST_CASE("recognizing growth-height-lexicographic sets") {
  CHECK(is_ghl(ghl_m3()));
  CHECK(is_ghl(BorelSet(3, 3, 0)));
  const BorelSet gap(3, 3, 0, sample::borel_closure({t3({1, 0, 2, 0})}, 0));
  REQUIRE(is_borel(gap));
  CHECK_FALSE(is_ghl(gap));
  CHECK_THROWS_AS(is_ghl(BorelSet(3, 3, 0, {t3({0, 1, 1, 1})})), NotBorel);
}

TEST_CASE("expansion counts follow the growth vector") {
  for (int n = 1; n <= 3; ++n) {
    for (int t = 1; t <= (n == 3 ? 3 : 4); ++t) {
      for (const auto& b : all_borel_sets(t, n)) {
        const auto vp = vectors_of(b);
        BorelSet e = b;
        for (int k = 1; k <= n; ++k) {
          e = expand(e);
          Integer predicted = 0;
          for (int i = 0; i <= n; ++i) predicted += oracle::pascal_binomial(i + k, k) * vp.gv[static_cast<std::size_t>(i)];
          REQUIRE(Integer(e.size()) == predicted);
        }
      }
    }
  }
}

TEST_CASE("at most one growth-height-lexicographic set per vector pair") {
  for (int n = 1; n <= 3; ++n) {
    for (int t = 1; t <= 4; ++t) {
      std::map<std::pair<I64, I64>, int> seen;
      for (const auto& b : all_borel_sets(t, n)) {
        if (!is_ghl(b)) continue;
        const auto vp = vectors_of(b);
        CHECK(++seen[{vp.hv, vp.gv}] == 1);
        CHECK(ghl_construct(vp) == b);
      }
    }
  }
}

TEST_CASE("vectors of a saturated ideal depend only on u and its regularity") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 400; ++k) {
    const int n = 1 + k % 3;
    const auto j = sample::saturated_borel_ideal(rng, n, 5, 1 + k % 3);
    const auto u = hf_quotient(j);
    const int m = static_cast<int>(reg_ss(j));
    if (m == 0) continue;
    const auto vp = vectors_of(j.component(m));
    CHECK(vp.hv == hv_from(u, m, n));
    CHECK(vp.gv == gv_from(u.tail(), m, n));
    CHECK_NOTHROW(vp.validate());
  }
}
