#include "doctest.h"
#include "oracles.hpp"
#include "regrange/errors.hpp"
#include "regrange/hilbert.hpp"

using namespace regrange;

namespace {
HilbertFunction hf(const char* text) { return parse_hilbert_function(text); }
}  // namespace

TEST_CASE("literals parse, canonicalize and print") {
  const auto u = hf("1 ; 4z");
  CHECK(u(0) == 1);
  CHECK(u(3) == 12);
  CHECK(hf("1,5;2z^2+3z+1")(2) == 15);
  CHECK(to_literal(hf("1,4,8,12,16;4z")) == "1 ; 4z");
  CHECK(to_display(hf("1,4,10;4z+1")) == "(1,4,10;4z+1)");
  CHECK(to_display(hf("4z+1")) == "(4z+1)");
  CHECK(hf("3z+1").prefix().empty());
  CHECK(hf(";3z+1") == hf("3z+1"));
  CHECK_THROWS_AS(hf("1,-1;3"), InvalidInput);
  CHECK_THROWS_AS(hf("1;z-5"), InvalidInput);
  CHECK_THROWS_AS(hf("1,2;"), InvalidInput);
}

TEST_CASE("delta and sigma") {
  CHECK(delta(hf("1,5;2z^2+3z+1")) == hf("1,4,10;4z+1"));
  CHECK(delta(hf("1,4,10,20,35,55,80;28z-90")) == hf("1,3,6,10,15,20,25,26;28"));
  CHECK(delta(hf("1;4z")) == hf("1,3;4"));
  CHECK(sigma(hf("1,3,6,10,15,20,25,26;28")) == hf("1,4,10,20,35,55,80;28z-90"));
  CHECK(sigma(hf("1;1")) == hf("z+1"));
  CHECK(sigma(delta(hf("1;4z"))) == hf("1;4z"));
  CHECK_THROWS_AS(delta(hf("2;3")), InvalidInput);
  CHECK_THROWS_AS(sigma(hf("0;3")), InvalidInput);
}

TEST_CASE("regularity of a numerical function") {
  CHECK(rho(hf("1;4z")) == 1);
  CHECK(rho(hf("1,5;2z^2+3z+1")) == 2);
  CHECK(rho(hf("4z+1")) == 0);
  CHECK(rho(hf("1,4,10,20,35,55,80;28z-90")) == 7);
}

TEST_CASE("pointwise order") {
  const auto f3 = hf("1,4,8;4z+1");
  const auto f5 = hf("1,3,6,10,15;4z+1");
  CHECK(leq(f3, hf("1,4,10;4z+1")));
  CHECK(leq(f3, f3));
  CHECK(leq(f5, f3));
  CHECK_FALSE(leq(f3, f5));
  CHECK_FALSE(leq(hf("z+1"), hf("1;1")));
  CHECK(leq(hf("1;1"), hf("z+1")));
  CHECK_FALSE(leq(hf("1,1,1;2"), hf("1,1,1,1,1,1,1,1,1,1;z-8")));
}

TEST_CASE("pointwise order agrees with a scan up to 50") {
  const std::vector<HilbertFunction> pool{
      hf("1,4,8;4z+1"), hf("1,3,6,10,15;4z+1"), hf("1,4,10;4z+1"), hf("1;4z"), hf("1,3;4"),
      hf("1,2,3,4,5,6;7"), hf("z+1"), hf("1,4,10,20,35,55,80;28z-90"), hf("1,3,6,10,15,20,25,26;28"),
      hf("1;5z-3"), hf("1,2;z^2"), hf("1,1,1;2"), hf("1,1,1,1,1,1,1,1,1,1;z-8")};
  for (const auto& a : pool) {
    for (const auto& b : pool) CHECK(leq(a, b) == oracle::leq_scan(a, b, 50));
  }
}

TEST_CASE("O-sequences") {
  CHECK(is_o_sequence(hf("1,4,10;4z+1")));
  CHECK_FALSE(is_o_sequence(hf("1,1,2;2")));
  CHECK(is_o_sequence(hf("1;0")));
  CHECK_FALSE(is_o_sequence(hf("2;0")));
  CHECK_FALSE(is_o_sequence(hf("1;2z^2")));
  for (const char* text : {"1,4,10;4z+1", "1,3;4", "1,4,8;4z+1", "1,3,6,10,15,20,25,26;28", "1;5z-3", "1,2,3;3",
                           "1,2,4;6", "1,3,7;11", "1,2,2,2,1;0"}) {
    CAPTURE(text);
    CHECK(is_o_sequence(hf(text)) == oracle::o_sequence_scan(hf(text), 60));
  }
}

TEST_CASE("Gotzmann numbers and admissibility") {
  CHECK(gotzmann_number(parse_polynomial("5z-3")) == 7);
  CHECK(gotzmann_number(parse_polynomial("4z+1")) == 7);
  CHECK(gotzmann_number(parse_polynomial("28")) == 28);
  CHECK(gotzmann_number(parse_polynomial("28z-90")) == 288);
  CHECK(gotzmann_number(parse_polynomial("2z^2+3z+1")) == 18);
  CHECK(is_admissible(parse_polynomial("28z-90")));
  CHECK_FALSE(is_admissible(parse_polynomial("-1")));
  CHECK_FALSE(is_admissible(parse_polynomial("2z^2")));
  CHECK_FALSE(is_admissible(IntPolynomial()));
  CHECK_THROWS_AS(gotzmann_number(parse_polynomial("2z^2")), InvalidInput);
  const auto dec = gotzmann_decomposition(parse_polynomial("5z-3"));
  REQUIRE(dec.blocks.size() == 2);
  CHECK(dec.blocks[0].exponent == 1);
  CHECK(dec.blocks[0].count == 5);
  CHECK(dec.blocks[1].exponent == 0);
  CHECK(dec.blocks[1].count == 2);
}

TEST_CASE("full ring and lex regularity") {
  CHECK(is_full_ring(hf("1/2z^2+3/2z+1")));
  CHECK(is_full_ring(hf("1")));
  CHECK_FALSE(is_full_ring(hf("1;4z")));
  CHECK(lex_regularity(hf("1/2z^2+3/2z+1")) == 0);
  CHECK(lex_regularity(hf("1,3;4")) == 4);
  CHECK(lex_regularity(hf("1,2,1;0")) == 3);
  CHECK(lex_regularity(hf("1,4,10;4z+1")) == 7);
}
