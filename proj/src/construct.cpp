#include "regrange/construct.hpp"

#include "regrange/errors.hpp"

namespace regrange {

int default_ambient(const HilbertFunction& u) {
  const Integer n = u(1) - 1;
  if (n < 0 || n > kMaxAmbient) {
    throw InvalidInput(to_display(u) + " needs ambient index " + to_string(n) + ", supported range is [0, " +
                       std::to_string(kMaxAmbient) + "]");
  }
  return static_cast<int>(n);
}

namespace {

int resolve_ambient(const HilbertFunction& u, std::optional<int> ambient_n) {
  const int base = default_ambient(u);
  if (!ambient_n) return base;
  if (*ambient_n < base) {
    throw InvalidInput(to_display(u) + " needs at least n = " + std::to_string(base) + ", got n = " +
                       std::to_string(*ambient_n));
  }
  if (*ambient_n > kMaxAmbient) {
    throw InvalidInput("ambient index " + std::to_string(*ambient_n) + " exceeds the supported maximum " +
                       std::to_string(kMaxAmbient));
  }
  return *ambient_n;
}

void certify(bool ok, const std::string& what) {
  if (!ok) throw CertificationError("postcondition failed: " + what);
}

}  // namespace

RegularityRange regularity_range(const HilbertFunction& u, std::optional<int> ambient_n) {
  if (!is_scheme_hf(u)) throw InvalidInput(to_display(u) + " is not the Hilbert function of a scheme");
  const int n = resolve_ambient(u, ambient_n);
  if (is_full_ring(u)) {
    return n == default_ambient(u) ? RegularityRange{0, 0} : RegularityRange{1, 1};
  }
  return {min_reg(u), max_reg(u)};
}

Construction construct_scheme_ideal(const HilbertFunction& u, std::int64_t m, std::optional<int> ambient_n) {
  const RegularityRange range = regularity_range(u, ambient_n);
  const int n = resolve_ambient(u, ambient_n);
  if (m < range.min_reg || m > range.max_reg) throw OutOfRange(m, range.min_reg, range.max_reg);
  const int degree = static_cast<int>(m);

  VectorPair vectors;
  BorelSet borel(degree, n, 0);
  try {
    vectors = VectorPair{hv_from(u, degree, n), gv_from(u.tail(), degree, n), degree, n};
    borel = ghl_construct(vectors);
  } catch (const InfeasibleVectors& e) {
    throw CertificationError(std::string("in-range vectors are infeasible: ") + e.what());
  } catch (const NotBorel& e) {
    throw CertificationError(std::string("in-range construction is not Borel: ") + e.what());
  }

  MonomialIdeal ideal = saturate_ss(MonomialIdeal(n, 0, borel.terms()));
  for (const auto& g : ideal.generators()) certify(g.exponent(0) == 0, "saturation (" + to_string(g) + ")");
  certify(is_strongly_stable(ideal), "strong stability");
  certify(hf_quotient(ideal) == u, "Hilbert function " + to_display(hf_quotient(ideal)) + " vs " + to_display(u));
  certify(reg_ss(ideal) == m, "regularity " + std::to_string(reg_ss(ideal)) + " vs " + std::to_string(m));
  return Construction{u, range, m, std::move(vectors), std::move(ideal)};
}

Construction construct_algebraic(const HilbertFunction& f, std::int64_t a) {
  if (!is_o_sequence(f)) throw InvalidInput(to_display(f) + " is not an O-sequence");
  const HilbertFunction u = sigma(f);
  const RegularityRange scheme_range = regularity_range(u);
  const RegularityRange range{scheme_range.min_reg, lex_regularity(f)};
  certify(range.max_reg == scheme_range.max_reg, "closed form of reg(lex(f))");
  if (a < range.min_reg || a > range.max_reg) throw OutOfRange(a, range.min_reg, range.max_reg);

  Construction scheme = construct_scheme_ideal(u, a);
  MonomialIdeal ideal = scheme.ideal.as_x0_free();
  certify(is_strongly_stable(ideal), "strong stability in x1..xn");
  certify(hf_quotient(ideal) == f, "quotient Hilbert function equals f");
  certify(reg_ss(ideal) == a, "regularity in x1..xn");
  return Construction{f, range, a, std::move(scheme.vectors), std::move(ideal)};
}

}  // namespace regrange
