#include "doctest.h"
#include "oracles.hpp"
#include "regrange/errors.hpp"
#include "regrange/macaulay.hpp"

using namespace regrange;

TEST_CASE("binomial follows the null convention") {
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-2, 1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(Integer(100), 50) == Integer("100891344545564193334812497256"));
}

TEST_CASE("binomial agrees with Pascal's triangle") {
  for (int n = -3; n <= 40; ++n) {
    for (int m = -2; m <= 42; ++m) CHECK(binomial(n, m) == oracle::pascal_binomial(n, m));
  }
}

TEST_CASE("binomial_poly extends binomial to negative arguments") {
  CHECK(binomial_poly(Integer(-1), 2) == 1);
  CHECK(binomial_poly(Integer(-3), 3) == -10);
  CHECK(binomial_poly(Integer(2), 3) == 0);
  CHECK(binomial_poly(Integer(7), 3) == 35);
}

TEST_CASE("Macaulay representations") {
  const auto r17 = macaulay_rep(17, 4);
  CHECK(r17.tops == std::vector<Integer>{6, 3, 2});
  CHECK(r17.lowest_index() == 2);
  CHECK(r17.value() == 17);
  CHECK(macaulay_rep(8, 3).tops == std::vector<Integer>{4, 3, 1});
  for (int t = 1; t <= 9; ++t) CHECK(macaulay_rep(1, t).tops == std::vector<Integer>{t});
  CHECK_THROWS_AS(macaulay_rep(0, 3), InvalidInput);
  CHECK_THROWS_AS(macaulay_rep(5, 0), InvalidInput);
}

TEST_CASE("growth and shrink on worked values") {
  CHECK(growth(5, 4) == 6);
  CHECK(growth(8, 3) == 10);
  CHECK(shrink(17, 4) == 12);
  CHECK(shrink(22, 5) == 16);
  CHECK(shrink(4, 1) == 1);
  for (int t = 1; t <= 6; ++t) {
    CHECK(growth(0, t) == 0);
    CHECK(shrink(0, t) == 0);
  }
  CHECK_THROWS_AS(growth(3, 0), InvalidInput);
  CHECK_THROWS_AS(shrink(-1, 2), InvalidInput);
}

TEST_CASE("growth equals the lex order-ideal count for a <= 200, t <= 6") {
  for (int t = 1; t <= 6; ++t) {
    for (int a = 0; a <= 200; ++a) {
      CAPTURE(t);
      CAPTURE(a);
      CHECK(growth(a, t) == oracle::lex_growth(a, t));
    }
  }
}

TEST_CASE("representations are unique, reconstruct and round trip") {
  for (int t = 1; t <= 12; ++t) {
    for (int a = 1; a <= 3000; ++a) {
      const auto rep = macaulay_rep(a, t);
      REQUIRE(rep.value() == a);
      for (std::size_t j = 1; j < rep.tops.size(); ++j) REQUIRE(rep.tops[j] < rep.tops[j - 1]);
      REQUIRE(rep.tops.back() >= rep.lowest_index());
      REQUIRE(rep.lowest_index() >= 1);
      REQUIRE(shrink(growth(a, t), t + 1) == a);
    }
  }
}

TEST_CASE("growth and shrink are monotone") {
  for (int t = 1; t <= 8; ++t) {
    for (int a = 0; a < 500; ++a) {
      REQUIRE(growth(a, t) <= growth(a + 1, t));
      REQUIRE(shrink(a, t) <= shrink(a + 1, t));
    }
  }
}
