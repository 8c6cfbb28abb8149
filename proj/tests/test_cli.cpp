#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string("'") + REGRANGE_CLI_PATH + "' " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("construct golden output") {
  const auto r3 = cli("construct '1 ; 4z' -m 3");
  CHECK(r3.code == 0);
  CHECK(r3.out.rfind("x3^2, x3*x2, x2^3\n", 0) == 0);
  CHECK(r3.out.find("hv: (6,2,0,0)") != std::string::npos);
  const auto r4 = cli("construct '1;4z' -m 4");
  CHECK(r4.out.rfind("x3^2, x3*x2, x3*x1^2, x2^4\n", 0) == 0);
  CHECK(r4.out.find("gv: (8,6,4,1)") != std::string::npos);
}

TEST_CASE("exit codes") {
  const auto out = cli("construct '1;4z' -m 5");
  CHECK(out.code == 2);
  CHECK(out.out.find("[3,4]") != std::string::npos);
  CHECK(cli("construct '1;4z'").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("range '1,2,x'").code == 2);
  CHECK(cli("range '1,3,6;2z+3'").code == 0);
  CHECK(cli("enumerate '1;4z' --cap 10").code == 2);
  CHECK(cli("--help").code == 0);
}

TEST_CASE("subcommands run") {
  CHECK(cli("range '1,4,10,20,35,55,80;28z-90'").out.rfind("9 28\n", 0) == 0);
  CHECK(cli("range '1,3;4'").out.rfind("3 3\n", 0) == 0);
  CHECK(cli("minfun 4z+1 -r 5").out == "1,3,6,10,15 ; 4z+1\n");
  CHECK(cli("gotzmann 28z-90").out.find("gotzmann_number: 288") != std::string::npos);
  CHECK(cli("lex '1,3;4'").code == 0);
  CHECK(cli("algebraic '1,3;4' -a 4").code == 0);
  CHECK(cli("vectors '1;4z' -m 4").code == 0);
  const auto e = cli("enumerate '1;4z' --threads 2");
  CHECK(e.code == 0);
  CHECK(e.out.find("PASS") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (const char* args : {"--json construct '1,5;2z^2+3z+1' -m 5", "enumerate '1,3,6;2z+3' --threads 3",
                           "selfcheck --iters 50"}) {
    CHECK(cli(args).out == cli(args).out);
  }
}

TEST_CASE("JSON certificate round trip") {
  const auto r = cli("--json construct '1,4,10,20,35,55,80;28z-90' -m 17");
  REQUIRE(r.code == 0);
  const std::string path = "cli_certificate.json";
  std::ofstream(path) << r.out;
  const auto v = cli("selfcheck --verify-file " + path);
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  std::remove(path.c_str());
}
