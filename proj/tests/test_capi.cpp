#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "regrange/regrange.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  rr_string_free(s);
  return out;
}

struct Hilbert {
  rr_hilbert* h = nullptr;
  explicit Hilbert(const char* text) { REQUIRE(rr_hilbert_parse(text, &h) == RR_OK); }
  ~Hilbert() { rr_hilbert_free(h); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(rr_version()).size() > 0);
  CHECK(std::string(rr_status_name(RR_OK)) == "ok");
  CHECK(std::string(rr_status_name(RR_OUT_OF_RANGE)) == "out of range");
}

TEST_CASE("parse errors set the last error") {
  rr_hilbert* h = nullptr;
  CHECK(rr_hilbert_parse("1,2,x", &h) == RR_INVALID_INPUT);
  CHECK(h == nullptr);
  CHECK(std::string(rr_last_error()).size() > 0);
  CHECK(rr_hilbert_parse(nullptr, &h) == RR_INVALID_INPUT);
}

TEST_CASE("hilbert function handle") {
  Hilbert u("1 ; 4z");
  char* s = nullptr;
  REQUIRE(rr_hilbert_value(u.h, 7, &s) == RR_OK);
  CHECK(take(s) == "28");
  REQUIRE(rr_hilbert_literal(u.h, &s) == RR_OK);
  CHECK(take(s) == "1 ; 4z");
  int flag = -1;
  REQUIRE(rr_hilbert_is_scheme(u.h, &flag) == RR_OK);
  CHECK(flag == 1);
  REQUIRE(rr_hilbert_is_o_sequence(u.h, &flag) == RR_OK);
  CHECK(flag == 1);
  Hilbert jump("1,2,4;4");
  REQUIRE(rr_hilbert_is_o_sequence(jump.h, &flag) == RR_OK);
  CHECK(flag == 0);
  REQUIRE(rr_hilbert_is_scheme(jump.h, &flag) == RR_OK);
  CHECK(flag == 0);
  std::int64_t lo = 0, hi = 0;
  REQUIRE(rr_regularity_range(u.h, RR_DEFAULT_AMBIENT, &lo, &hi) == RR_OK);
  CHECK(lo == 3);
  CHECK(hi == 4);
  CHECK(rr_regularity_range(u.h, 1, &lo, &hi) == RR_INVALID_INPUT);
}

TEST_CASE("construct through handles") {
  Hilbert u("1;4z");
  rr_ideal* j = nullptr;
  REQUIRE(rr_construct(u.h, 4, RR_DEFAULT_AMBIENT, &j) == RR_OK);
  CHECK(rr_ideal_ambient(j) == 3);
  CHECK(rr_ideal_first_var(j) == 0);
  CHECK(rr_ideal_regularity(j) == 4);
  REQUIRE(rr_ideal_generator_count(j) == 4);
  std::vector<int> e(4);
  REQUIRE(rr_ideal_generator(j, 2, e.data(), e.size()) == RR_OK);
  CHECK(e == std::vector<int>{0, 2, 0, 1});
  CHECK(rr_ideal_generator(j, 9, e.data(), e.size()) == RR_INVALID_INPUT);
  CHECK(rr_ideal_generator(j, 0, e.data(), 2) == RR_INVALID_INPUT);
  char* s = nullptr;
  REQUIRE(rr_ideal_to_string(j, &s) == RR_OK);
  CHECK(take(s) == "x3^2, x3*x2, x3*x1^2, x2^4");
  rr_hilbert* back = nullptr;
  REQUIRE(rr_ideal_hilbert(j, &back) == RR_OK);
  REQUIRE(rr_hilbert_literal(back, &s) == RR_OK);
  CHECK(take(s) == "1 ; 4z");
  rr_hilbert_free(back);
  rr_ideal_free(j);

  j = nullptr;
  CHECK(rr_construct(u.h, 5, RR_DEFAULT_AMBIENT, &j) == RR_OUT_OF_RANGE);
  CHECK(j == nullptr);
  CHECK(std::string(rr_last_error()).find("[3,4]") != std::string::npos);
}

TEST_CASE("algebraic and lex handles") {
  Hilbert f("1,3;4");
  rr_ideal* j = nullptr;
  REQUIRE(rr_construct_algebraic(f.h, 3, &j) == RR_OK);
  CHECK(rr_ideal_first_var(j) == 1);
  rr_ideal_free(j);
  CHECK(rr_lex_ideal(f.h, 2, &j) == RR_INVALID_INPUT);
  REQUIRE(rr_lex_ideal(f.h, 3, &j) == RR_OK);
  CHECK(rr_ideal_regularity(j) == 4);
  rr_ideal_free(j);
  Hilbert bad("1,1,2;2");
  CHECK(rr_lex_ideal(bad.h, 2, &j) == RR_INVALID_INPUT);
}

TEST_CASE("reports") {
  char* s = nullptr;
  REQUIRE(rr_report_range("1,5;2z^2+3z+1", RR_DEFAULT_AMBIENT, 0, &s) == RR_OK);
  CHECK(take(s).rfind("3 7\n", 0) == 0);
  REQUIRE(rr_report_construct("1;4z", 3, RR_DEFAULT_AMBIENT, 1, &s) == RR_OK);
  const std::string cert = take(s);
  REQUIRE(rr_verify_certificate(cert.c_str(), 0, &s) == RR_OK);
  CHECK(take(s).find("FAIL") == std::string::npos);
  std::string forged = cert;
  forged.replace(forged.find("\"requested_m\": 3"), 16, "\"requested_m\": 4");
  CHECK(rr_verify_certificate(forged.c_str(), 0, &s) == RR_CERTIFICATION);
  CHECK(take(s).find("FAIL") != std::string::npos);
  s = nullptr;
  CHECK(rr_report_enumerate("1;4z", RR_DEFAULT_AMBIENT, 10, 1, 0, &s) == RR_CAP_EXCEEDED);
  CHECK(s == nullptr);
  REQUIRE(rr_report_gotzmann("5z-3", 0, &s) == RR_OK);
  CHECK(take(s).find("gotzmann_number: 7") != std::string::npos);
  CHECK(rr_report_vectors("1,4;7z", 3, 2, 0, &s) != RR_OK);
}

TEST_CASE("null arguments") {
  CHECK(rr_regularity_range(nullptr, RR_DEFAULT_AMBIENT, nullptr, nullptr) == RR_INVALID_INPUT);
  rr_ideal_free(nullptr);
  rr_hilbert_free(nullptr);
  rr_string_free(nullptr);
}
