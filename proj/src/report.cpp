#include "report.hpp"

#include <sstream>

#include "regrange/borelvec.hpp"
#include "regrange/construct.hpp"
#include "regrange/errors.hpp"
#include "regrange/minfun.hpp"

namespace regrange::report {

using Json = nlohmann::ordered_json;

namespace {

Json int_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return to_string(v);
}

std::string tuple(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string ring(const MonomialIdeal& j) {
  return "x" + std::to_string(j.first_var()) + "..x" + std::to_string(j.ambient());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json certificate_json(const Construction& c) {
  Json cert;
  cert["hilbert_function"] = to_literal(c.hilbert);
  cert["m_u"] = c.range.min_reg;
  cert["M_u"] = c.range.max_reg;
  cert["requested_m"] = c.requested;
  cert["hv"] = c.vectors.hv;
  cert["gv"] = c.vectors.gv;
  return cert;
}

std::string construction_report(const Construction& c, const char* kind, bool json) {
  if (json) {
    Json out;
    out["kind"] = kind;
    out["ideal"] = ideal_json(c.ideal);
    out["certificate"] = certificate_json(c);
    return dump(out);
  }
  std::ostringstream os;
  os << to_string(c.ideal) << "\n"
     << "ring: " << ring(c.ideal) << "\n"
     << "certificate:\n"
     << "  hilbert_function: " << to_display(c.hilbert) << "\n"
     << "  m_u: " << c.range.min_reg << "\n"
     << "  M_u: " << c.range.max_reg << "\n"
     << "  requested_m: " << c.requested << "\n"
     << "  hv: " << tuple(c.vectors.hv) << "\n"
     << "  gv: " << tuple(c.vectors.gv) << "\n";
  return os.str();
}

std::string shift_text(std::int64_t s) {
  if (s == 0) return "z";
  return s > 0 ? "z+" + std::to_string(s) : "z" + std::to_string(s);
}

}  // namespace

Json ideal_json(const MonomialIdeal& ideal) {
  Json out;
  out["ambient_n"] = ideal.ambient();
  out["first_var"] = ideal.first_var();
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.exponents());
  out["generators"] = gens;
  out["regularity"] = reg_ss(ideal);
  out["text"] = to_string(ideal);
  return out;
}

std::string range(const std::string& hf, std::optional<int> ambient, bool json) {
  const HilbertFunction u = parse_hilbert_function(hf);
  const RegularityRange r = regularity_range(u, ambient);
  const int n = ambient.value_or(default_ambient(u));
  const std::int64_t gotz = gotzmann_number(u.tail());
  if (json) {
    Json out;
    out["hilbert_function"] = to_literal(u);
    out["n"] = n;
    out["m_u"] = r.min_reg;
    out["M_u"] = r.max_reg;
    out["rho"] = rho(u);
    out["gotzmann_number"] = gotz;
    out["tail"] = to_string(u.tail());
    return dump(out);
  }
  std::ostringstream os;
  os << r.min_reg << " " << r.max_reg << "\n"
     << "rho: " << rho(u) << "\n"
     << "gotzmann_number: " << gotz << "\n"
     << "tail: " << to_string(u.tail()) << "\n";
  return os.str();
}

std::string construct(const std::string& hf, std::int64_t m, std::optional<int> ambient, bool json) {
  return construction_report(construct_scheme_ideal(parse_hilbert_function(hf), m, ambient), "scheme", json);
}

std::string algebraic(const std::string& hf, std::int64_t a, bool json) {
  return construction_report(construct_algebraic(parse_hilbert_function(hf), a), "algebraic", json);
}

std::string lex(const std::string& hf, std::optional<int> ambient, bool json) {
  const HilbertFunction h = parse_hilbert_function(hf);
  const int n = ambient.value_or(std::max(1, static_cast<int>(to_int64(h(1), "H(1)"))));
  const MonomialIdeal j = lex_ideal(h, n, 1);
  if (json) {
    Json out;
    out["hilbert_function"] = to_literal(h);
    out["ideal"] = ideal_json(j);
    return dump(out);
  }
  return to_string(j) + "\nring: " + ring(j) + "\nregularity: " + std::to_string(reg_ss(j)) + "\n";
}

std::string minfun(const std::string& poly, std::int64_t rho, bool use_g, bool json) {
  const IntPolynomial p = parse_polynomial(poly);
  const HilbertFunction h = use_g ? minimal_g(p, rho) : minimal_f(p, rho);
  if (json) {
    Json out;
    out["polynomial"] = to_string(p);
    out["rho"] = rho;
    out["function"] = use_g ? "g" : "f";
    out["hilbert_function"] = to_literal(h);
    out["regularity"] = regrange::rho(h);
    return dump(out);
  }
  return to_literal(h) + "\n";
}

std::string gotzmann(const std::string& poly, bool json) {
  const IntPolynomial p = parse_polynomial(poly);
  const bool ok = is_admissible(p);
  std::optional<GotzmannDecomposition> dec;
  if (ok) dec = gotzmann_decomposition(p);
  if (json) {
    Json out;
    out["polynomial"] = to_string(p);
    out["admissible"] = ok;
    out["gotzmann_number"] = dec ? int_json(dec->length) : Json(nullptr);
    Json blocks = Json::array();
    if (dec) {
      for (const auto& b : dec->blocks) blocks.push_back(Json{{"exponent", b.exponent}, {"count", int_json(b.count)}});
    }
    out["blocks"] = blocks;
    return dump(out);
  }
  std::ostringstream os;
  os << "polynomial: " << to_string(p) << "\n" << "admissible: " << (ok ? "yes" : "no") << "\n";
  if (!dec) return os.str();
  os << "gotzmann_number: " << to_string(dec->length) << "\n" << "exponents:";
  for (const auto& b : dec->blocks) os << " " << b.exponent << "^" << to_string(b.count);
  os << "\n";
  if (dec->length <= 16) {
    os << "decomposition: ";
    std::int64_t i = 1;
    for (const auto& b : dec->blocks) {
      for (Integer c = 0; c < b.count; ++c, ++i) {
        os << (i > 1 ? " + " : "") << "C(" << shift_text(b.exponent - i + 1) << "," << b.exponent << ")";
      }
    }
    os << "\n";
  }
  return os.str();
}

std::string vectors(const std::string& hf, std::int64_t m, std::optional<int> ambient, bool json) {
  const HilbertFunction u = parse_hilbert_function(hf);
  if (!is_scheme_hf(u)) throw InvalidInput(to_display(u) + " is not the Hilbert function of a scheme");
  const int n = ambient.value_or(default_ambient(u));
  if (m < rho(u)) {
    throw InvalidInput("degree " + std::to_string(m) + " is below the regularity " + std::to_string(rho(u)) +
                       " of " + to_display(u));
  }
  const int degree = static_cast<int>(m);
  const VectorPair vp{hv_from(u, degree, n), gv_from(u.tail(), degree, n), degree, n};
  vp.validate();
  if (json) {
    Json out;
    out["hilbert_function"] = to_literal(u);
    out["m"] = m;
    out["n"] = n;
    out["hv"] = vp.hv;
    out["gv"] = vp.gv;
    return dump(out);
  }
  return "hv: " + tuple(vp.hv) + "\ngv: " + tuple(vp.gv) + "\n";
}

Outcome enumerate(const std::string& hf, std::optional<int> ambient, const EnumerationOptions& opts, bool json) {
  const HilbertFunction u = parse_hilbert_function(hf);
  if (!is_scheme_hf(u)) throw InvalidInput(to_display(u) + " is not the Hilbert function of a scheme");
  const int n = ambient.value_or(default_ambient(u));
  const MainTheoremReport rep = verify_main_theorem(u, n, opts);
  std::size_t total = 0;
  for (const auto& [r, count] : rep.count_by_regularity) total += count;
  if (json) {
    Json out;
    out["u"] = to_literal(u);
    out["n"] = n;
    out["m_u"] = rep.range.min_reg;
    out["M_u"] = rep.range.max_reg;
    out["spectrum"] = rep.spectrum;
    Json counts = Json::object();
    for (const auto& [r, count] : rep.count_by_regularity) counts[std::to_string(r)] = count;
    out["count_by_regularity"] = counts;
    Json witnesses = Json::array();
    for (const auto& [m, ideal] : rep.witnesses) witnesses.push_back(Json{{"m", m}, {"ideal", ideal_json(ideal)}});
    out["witnesses"] = witnesses;
    out["ideals"] = total;
    out["rejected_tail"] = rep.rejected_tail;
    out["pass"] = rep.pass;
    out["failure"] = rep.failure;
    return {dump(out), rep.pass};
  }
  std::ostringstream os;
  os << "u: " << to_display(u) << "\n"
     << "n: " << n << "\n"
     << "interval: [" << rep.range.min_reg << "," << rep.range.max_reg << "]\n"
     << "spectrum: {";
  for (std::size_t i = 0; i < rep.spectrum.size(); ++i) os << (i ? "," : "") << rep.spectrum[i];
  os << "}\n" << "ideals: " << total << "\n";
  for (const auto& [r, count] : rep.count_by_regularity) os << "  regularity " << r << ": " << count << "\n";
  os << "rejected_tail: " << rep.rejected_tail << "\n";
  for (const auto& [m, ideal] : rep.witnesses) os << "witness m=" << m << ": " << to_string(ideal) << "\n";
  os << "verdict: " << (rep.pass ? "PASS" : "FAIL " + rep.failure) << "\n";
  return {os.str(), rep.pass};
}

Outcome selfcheck(const SelfcheckOptions& opts, bool json) {
  const auto results = run_selfcheck(opts);
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  for (const auto& r : results) {
    cases += r.cases;
    failures += r.failures;
  }
  if (json) {
    Json out;
    out["seed"] = opts.seed;
    out["iters"] = opts.iters;
    Json suites = Json::array();
    for (const auto& r : results) {
      suites.push_back(Json{{"name", r.name}, {"cases", r.cases}, {"failures", r.failures},
                            {"first_failure", r.first_failure}});
    }
    out["suites"] = suites;
    out["cases"] = cases;
    out["failures"] = failures;
    return {dump(out), failures == 0};
  }
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.failures == 0 ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases << " failures=" << r.failures;
    if (!r.first_failure.empty()) os << " first: " << r.first_failure;
    os << "\n";
  }
  os << "total: " << results.size() << " suites, " << cases << " cases, " << failures << " failures\n";
  return {os.str(), failures == 0};
}

Outcome verify_certificate(const std::string& json_text, bool json) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("certificate is not valid JSON: ") + e.what());
  }
  std::vector<std::pair<std::string, bool>> checks;
  MonomialIdeal ideal(0, 0, {});
  HilbertFunction h;
  std::string kind;
  std::int64_t requested = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<std::int64_t> hv;
  std::vector<std::int64_t> gv;
  try {
    kind = doc.at("kind").get<std::string>();
    const auto& id = doc.at("ideal");
    const int n = id.at("ambient_n").get<int>();
    const int first = id.at("first_var").get<int>();
    std::vector<Term> gens;
    for (const auto& e : id.at("generators")) {
      const auto exps = e.get<std::vector<int>>();
      if (static_cast<int>(exps.size()) != n + 1) throw InvalidInput("generator has the wrong length");
      gens.push_back(Term::from_exponents(exps));
    }
    ideal = MonomialIdeal(n, first, std::move(gens));
    const auto& cert = doc.at("certificate");
    h = parse_hilbert_function(cert.at("hilbert_function").get<std::string>());
    requested = cert.at("requested_m").get<std::int64_t>();
    lo = cert.at("m_u").get<std::int64_t>();
    hi = cert.at("M_u").get<std::int64_t>();
    hv = cert.at("hv").get<std::vector<std::int64_t>>();
    gv = cert.at("gv").get<std::vector<std::int64_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("certificate is missing fields: ") + e.what());
  }
  if (kind != "scheme" && kind != "algebraic") throw InvalidInput("unknown certificate kind '" + kind + "'");

  const bool scheme = kind == "scheme";
  const bool stable = is_strongly_stable(ideal);
  checks.emplace_back("ring", ideal.first_var() == (scheme ? 0 : 1));
  checks.emplace_back("strongly_stable", stable);
  bool x0_free = true;
  for (const auto& g : ideal.generators()) x0_free = x0_free && g.exponent(0) == 0;
  checks.emplace_back("saturated", x0_free);
  checks.emplace_back("hilbert_function", stable && hf_quotient(ideal) == h);
  checks.emplace_back("regularity", stable && reg_ss(ideal) == requested);

  RegularityRange range;
  if (scheme) {
    range = regularity_range(h, ideal.ambient());
  } else {
    range = RegularityRange{regularity_range(sigma(h)).min_reg, lex_regularity(h)};
  }
  checks.emplace_back("interval", range.min_reg == lo && range.max_reg == hi);
  checks.emplace_back("requested_in_interval", lo <= requested && requested <= hi);
  bool vectors_ok = false;
  if (stable && x0_free && requested >= 0) {
    const MonomialIdeal full = scheme ? ideal : ideal.extended_to_x0();
    const VectorPair vp = vectors_of(full.component(static_cast<int>(requested)));
    vectors_ok = vp.hv == hv && vp.gv == gv;
  }
  checks.emplace_back("vectors", vectors_ok);

  bool ok = true;
  for (const auto& [name, pass] : checks) ok = ok && pass;
  if (json) {
    Json out;
    out["kind"] = kind;
    Json list = Json::object();
    for (const auto& [name, pass] : checks) list[name] = pass;
    out["checks"] = list;
    out["pass"] = ok;
    return {dump(out), ok};
  }
  std::ostringstream os;
  for (const auto& [name, pass] : checks) os << (pass ? "PASS " : "FAIL ") << name << "\n";
  os << "verdict: " << (ok ? "PASS" : "FAIL") << "\n";
  return {os.str(), ok};
}

}  // namespace regrange::report
