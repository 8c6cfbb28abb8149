#include "regrange/regrange.h"

#include <cstring>
#include <optional>
#include <string>

#include "regrange/construct.hpp"
#include "regrange/errors.hpp"
#include "report.hpp"

struct rr_hilbert {
  regrange::HilbertFunction value;
};

struct rr_ideal {
  regrange::MonomialIdeal value;
};

namespace {

thread_local std::string last_error;

template <class F>
rr_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const regrange::OutOfRange& e) {
    last_error = e.what();
    return RR_OUT_OF_RANGE;
  } catch (const regrange::CapExceeded& e) {
    last_error = e.what();
    return RR_CAP_EXCEEDED;
  } catch (const regrange::InvalidInput& e) {
    last_error = e.what();
    return RR_INVALID_INPUT;
  } catch (const regrange::InfeasibleVectors& e) {
    last_error = e.what();
    return RR_INFEASIBLE;
  } catch (const regrange::NotBorel& e) {
    last_error = e.what();
    return RR_NOT_BOREL;
  } catch (const regrange::CertificationError& e) {
    last_error = e.what();
    return RR_CERTIFICATION;
  } catch (const std::exception& e) {
    last_error = e.what();
    return RR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return RR_INTERNAL;
  }
}

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::optional<int> ambient_arg(int ambient) {
  if (ambient == RR_DEFAULT_AMBIENT) return std::nullopt;
  return ambient;
}

rr_status need(const void* p, const char* what) {
  if (p != nullptr) return RR_OK;
  last_error = std::string(what) + " must not be null";
  return RR_INVALID_INPUT;
}

// Writes the report and maps a failed verdict to RR_CERTIFICATION.
rr_status emit(const regrange::report::Outcome& outcome, char** out) {
  *out = duplicate(outcome.text);
  if (!outcome.ok) {
    last_error = "verification failed";
    return RR_CERTIFICATION;
  }
  return RR_OK;
}

}  // namespace

extern "C" {

const char* rr_version(void) { return "0.1.0"; }

const char* rr_last_error(void) { return last_error.c_str(); }

const char* rr_status_name(rr_status status) {
  switch (status) {
    case RR_OK: return "ok";
    case RR_INVALID_INPUT: return "invalid input";
    case RR_OUT_OF_RANGE: return "out of range";
    case RR_CAP_EXCEEDED: return "cap exceeded";
    case RR_INFEASIBLE: return "infeasible vectors";
    case RR_NOT_BOREL: return "not Borel";
    case RR_CERTIFICATION: return "certification failure";
    case RR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void rr_string_free(char* s) { delete[] s; }

rr_status rr_hilbert_parse(const char* literal, rr_hilbert** out) {
  return guarded([&] {
    if (auto s = need(literal, "literal"); s != RR_OK) return s;
    if (auto s = need(out, "out"); s != RR_OK) return s;
    *out = new rr_hilbert{regrange::parse_hilbert_function(literal)};
    return RR_OK;
  });
}

void rr_hilbert_free(rr_hilbert* h) { delete h; }

rr_status rr_hilbert_value(const rr_hilbert* h, int64_t t, char** out) {
  return guarded([&] {
    if (auto s = need(h, "h"); s != RR_OK) return s;
    if (t < 0) throw regrange::InvalidInput("t must be nonnegative");
    *out = duplicate(regrange::to_string(h->value(t)));
    return RR_OK;
  });
}

rr_status rr_hilbert_literal(const rr_hilbert* h, char** out) {
  return guarded([&] {
    if (auto s = need(h, "h"); s != RR_OK) return s;
    *out = duplicate(regrange::to_literal(h->value));
    return RR_OK;
  });
}

rr_status rr_hilbert_is_o_sequence(const rr_hilbert* h, int* out) {
  return guarded([&] {
    if (auto s = need(h, "h"); s != RR_OK) return s;
    *out = regrange::is_o_sequence(h->value) ? 1 : 0;
    return RR_OK;
  });
}

rr_status rr_hilbert_is_scheme(const rr_hilbert* h, int* out) {
  return guarded([&] {
    if (auto s = need(h, "h"); s != RR_OK) return s;
    *out = regrange::is_scheme_hf(h->value) ? 1 : 0;
    return RR_OK;
  });
}

rr_status rr_regularity_range(const rr_hilbert* u, int ambient, int64_t* min_reg, int64_t* max_reg) {
  return guarded([&] {
    if (auto s = need(u, "u"); s != RR_OK) return s;
    const auto r = regrange::regularity_range(u->value, ambient_arg(ambient));
    *min_reg = r.min_reg;
    *max_reg = r.max_reg;
    return RR_OK;
  });
}

rr_status rr_construct(const rr_hilbert* u, int64_t m, int ambient, rr_ideal** out) {
  return guarded([&] {
    if (auto s = need(u, "u"); s != RR_OK) return s;
    *out = new rr_ideal{regrange::construct_scheme_ideal(u->value, m, ambient_arg(ambient)).ideal};
    return RR_OK;
  });
}

rr_status rr_construct_algebraic(const rr_hilbert* f, int64_t a, rr_ideal** out) {
  return guarded([&] {
    if (auto s = need(f, "f"); s != RR_OK) return s;
    *out = new rr_ideal{regrange::construct_algebraic(f->value, a).ideal};
    return RR_OK;
  });
}

rr_status rr_lex_ideal(const rr_hilbert* h, int ambient, rr_ideal** out) {
  return guarded([&] {
    if (auto s = need(h, "h"); s != RR_OK) return s;
    const int n = ambient == RR_DEFAULT_AMBIENT
                      ? std::max(1, static_cast<int>(regrange::to_int64(h->value(1), "H(1)")))
                      : ambient;
    *out = new rr_ideal{regrange::lex_ideal(h->value, n, 1)};
    return RR_OK;
  });
}

void rr_ideal_free(rr_ideal* ideal) { delete ideal; }

int rr_ideal_ambient(const rr_ideal* ideal) { return ideal ? ideal->value.ambient() : -1; }

int rr_ideal_first_var(const rr_ideal* ideal) { return ideal ? ideal->value.first_var() : -1; }

size_t rr_ideal_generator_count(const rr_ideal* ideal) { return ideal ? ideal->value.generators().size() : 0; }

rr_status rr_ideal_generator(const rr_ideal* ideal, size_t index, int* exponents, size_t cap) {
  return guarded([&] {
    if (auto s = need(ideal, "ideal"); s != RR_OK) return s;
    const auto& gens = ideal->value.generators();
    if (index >= gens.size()) throw regrange::InvalidInput("generator index out of range");
    const auto exps = gens[index].exponents();
    if (cap < exps.size()) throw regrange::InvalidInput("exponent buffer too small");
    std::copy(exps.begin(), exps.end(), exponents);
    return RR_OK;
  });
}

int64_t rr_ideal_regularity(const rr_ideal* ideal) {
  if (ideal == nullptr) return -1;
  try {
    return regrange::reg_ss(ideal->value);
  } catch (const std::exception&) {
    return -1;
  }
}

rr_status rr_ideal_to_string(const rr_ideal* ideal, char** out) {
  return guarded([&] {
    if (auto s = need(ideal, "ideal"); s != RR_OK) return s;
    *out = duplicate(regrange::to_string(ideal->value));
    return RR_OK;
  });
}

rr_status rr_ideal_hilbert(const rr_ideal* ideal, rr_hilbert** out) {
  return guarded([&] {
    if (auto s = need(ideal, "ideal"); s != RR_OK) return s;
    *out = new rr_hilbert{regrange::hf_quotient(ideal->value)};
    return RR_OK;
  });
}

rr_status rr_report_range(const char* hf, int ambient, int json, char** out) {
  return guarded([&] {
    if (auto s = need(hf, "hf"); s != RR_OK) return s;
    *out = duplicate(regrange::report::range(hf, ambient_arg(ambient), json != 0));
    return RR_OK;
  });
}

rr_status rr_report_construct(const char* hf, int64_t m, int ambient, int json, char** out) {
  return guarded([&] {
    if (auto s = need(hf, "hf"); s != RR_OK) return s;
    *out = duplicate(regrange::report::construct(hf, m, ambient_arg(ambient), json != 0));
    return RR_OK;
  });
}

rr_status rr_report_algebraic(const char* hf, int64_t a, int json, char** out) {
  return guarded([&] {
    if (auto s = need(hf, "hf"); s != RR_OK) return s;
    *out = duplicate(regrange::report::algebraic(hf, a, json != 0));
    return RR_OK;
  });
}

rr_status rr_report_lex(const char* hf, int ambient, int json, char** out) {
  return guarded([&] {
    if (auto s = need(hf, "hf"); s != RR_OK) return s;
    *out = duplicate(regrange::report::lex(hf, ambient_arg(ambient), json != 0));
    return RR_OK;
  });
}

rr_status rr_report_minfun(const char* poly, int64_t rho, int use_g, int json, char** out) {
  return guarded([&] {
    if (auto s = need(poly, "poly"); s != RR_OK) return s;
    *out = duplicate(regrange::report::minfun(poly, rho, use_g != 0, json != 0));
    return RR_OK;
  });
}

rr_status rr_report_gotzmann(const char* poly, int json, char** out) {
  return guarded([&] {
    if (auto s = need(poly, "poly"); s != RR_OK) return s;
    *out = duplicate(regrange::report::gotzmann(poly, json != 0));
    return RR_OK;
  });
}

rr_status rr_report_vectors(const char* hf, int64_t m, int ambient, int json, char** out) {
  return guarded([&] {
    if (auto s = need(hf, "hf"); s != RR_OK) return s;
    *out = duplicate(regrange::report::vectors(hf, m, ambient_arg(ambient), json != 0));
    return RR_OK;
  });
}

rr_status rr_report_enumerate(const char* hf, int ambient, uint64_t cap, unsigned threads, int json, char** out) {
  return guarded([&] {
    if (auto s = need(hf, "hf"); s != RR_OK) return s;
    regrange::EnumerationOptions opts;
    if (cap != 0) opts.cap = cap;
    opts.threads = threads == 0 ? 1 : threads;
    return emit(regrange::report::enumerate(hf, ambient_arg(ambient), opts, json != 0), out);
  });
}

rr_status rr_selfcheck(uint64_t seed, uint64_t iters, int json, char** out) {
  return guarded([&] {
    regrange::SelfcheckOptions opts;
    opts.seed = seed;
    opts.iters = iters;
    return emit(regrange::report::selfcheck(opts, json != 0), out);
  });
}

rr_status rr_verify_certificate(const char* json_text, int json, char** out) {
  return guarded([&] {
    if (auto s = need(json_text, "json_text"); s != RR_OK) return s;
    return emit(regrange::report::verify_certificate(json_text, json != 0), out);
  });
}

}  // extern "C"
