// Command-line front end. Talks to the library only through regrange.h.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "regrange/regrange.h"

namespace {

int exit_code(rr_status status) {
  switch (status) {
    case RR_OK:
      return 0;
    case RR_INVALID_INPUT:
    case RR_OUT_OF_RANGE:
    case RR_CAP_EXCEEDED:
    case RR_INFEASIBLE:
    case RR_NOT_BOREL:
      return 2;
    default:
      return 3;
  }
}

// Prints whatever report the call produced, then the error if any.
int finish(rr_status status, char* out) {
  if (out != nullptr) {
    std::cout << out;
    rr_string_free(out);
  }
  if (status != RR_OK) std::cerr << "error (" << rr_status_name(status) << "): " << rr_last_error() << "\n";
  return exit_code(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity ranges and certified strongly stable ideals for Hilbert functions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rr_version()));
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of text");

  std::string hf;
  std::string poly;
  std::int64_t degree = 0;
  int ambient = RR_DEFAULT_AMBIENT;
  auto add_hf = [&](CLI::App* sub) {
    sub->add_option("hf", hf, "Hilbert function literal, e.g. \"1,4,8 ; 4z+1\"")->required();
    sub->fallthrough();
  };
  auto add_ambient = [&](CLI::App* sub) {
    sub->add_option("-n", ambient, "Ambient index n of x0..xn (default u(1)-1)")->check(CLI::NonNegativeNumber);
  };

  auto* range = app.add_subcommand("range", "Print m_u and M_u");
  add_hf(range);
  add_ambient(range);

  auto* construct = app.add_subcommand("construct", "Certified saturated strongly stable ideal of regularity m");
  add_hf(construct);
  construct->add_option("-m", degree, "Requested regularity")->required();
  add_ambient(construct);

  auto* algebraic = app.add_subcommand("algebraic", "Strongly stable ideal in x1..xn with quotient f and regularity a");
  add_hf(algebraic);
  algebraic->add_option("-a", degree, "Requested regularity")->required();

  auto* lex = app.add_subcommand("lex", "Lex-segment ideal in x1..xn");
  add_hf(lex);
  lex->add_option("-n", ambient, "Number of variables (default H(1))")->check(CLI::PositiveNumber);

  bool use_g = false;
  auto* minfun = app.add_subcommand("minfun", "Minimal function f^rho (or g^rho) of a polynomial");
  minfun->add_option("poly", poly, "Polynomial in z")->required();
  minfun->add_option("-r", degree, "Regularity bound rho")->required();
  minfun->add_flag("--g", use_g, "Use g^rho instead of f^rho");
  minfun->fallthrough();

  auto* gotzmann = app.add_subcommand("gotzmann", "Gotzmann number and decomposition");
  gotzmann->add_option("poly", poly, "Polynomial in z")->required();
  gotzmann->fallthrough();

  auto* vectors = app.add_subcommand("vectors", "Height and growth vectors forced in degree m");
  add_hf(vectors);
  vectors->add_option("-m", degree, "Degree")->required();
  add_ambient(vectors);

  std::uint64_t cap = 0;
  unsigned threads = 1;
  auto* enumerate = app.add_subcommand("enumerate", "Brute-force regularity spectrum");
  add_hf(enumerate);
  add_ambient(enumerate);
  enumerate->add_option("--cap", cap, "Bound on C(M_u+n,n) (default REGRANGE_ENUM_CAP or 5000)");
  enumerate->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  std::uint64_t seed = 20240611;
  std::uint64_t iters = 10000;
  std::string verify_file;
  auto* selfcheck = app.add_subcommand("selfcheck", "Run the property suites");
  selfcheck->add_option("--seed", seed, "Random seed");
  selfcheck->add_option("--iters", iters, "Cases per suite");
  selfcheck->add_option("--verify-file", verify_file, "Re-verify a JSON certificate from construct/algebraic");
  selfcheck->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const int j = json ? 1 : 0;
  char* out = nullptr;
  rr_status status = RR_OK;
  if (*range) {
    status = rr_report_range(hf.c_str(), ambient, j, &out);
  } else if (*construct) {
    status = rr_report_construct(hf.c_str(), degree, ambient, j, &out);
  } else if (*algebraic) {
    status = rr_report_algebraic(hf.c_str(), degree, j, &out);
  } else if (*lex) {
    status = rr_report_lex(hf.c_str(), ambient, j, &out);
  } else if (*minfun) {
    status = rr_report_minfun(poly.c_str(), degree, use_g ? 1 : 0, j, &out);
  } else if (*gotzmann) {
    status = rr_report_gotzmann(poly.c_str(), j, &out);
  } else if (*vectors) {
    status = rr_report_vectors(hf.c_str(), degree, ambient, j, &out);
  } else if (*enumerate) {
    status = rr_report_enumerate(hf.c_str(), ambient, cap, threads, j, &out);
  } else if (*selfcheck) {
    if (!verify_file.empty()) {
      std::ifstream in(verify_file);
      if (!in) {
        std::cerr << "error: cannot read " << verify_file << "\n";
        return 2;
      }
      std::ostringstream text;
      text << in.rdbuf();
      status = rr_verify_certificate(text.str().c_str(), j, &out);
    } else {
      status = rr_selfcheck(seed, iters, j, &out);
    }
  }
  return finish(status, out);
}
