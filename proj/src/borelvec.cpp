#include "regrange/borelvec.hpp"

#include <numeric>

#include "regrange/errors.hpp"

namespace regrange {

namespace {

std::string vec_text(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

// Bucket sets without any closure check.
std::vector<Term> assemble(const VectorPair& vp) {
  const int m = vp.degree;
  const int n = vp.ambient;
  std::vector<Term> out;
  for (int i = 1; i <= n; ++i) {
    const auto count = static_cast<std::size_t>(vp.gv[static_cast<std::size_t>(i)]);
    for (const auto& t : top_terms(m - 1, i, n, n, count)) out.push_back(t.times(i));
  }
  for (int i = 1; i <= m; ++i) {
    const auto count = static_cast<std::size_t>(vp.hv[static_cast<std::size_t>(i)]);
    for (const auto& t : top_terms(m - i, 1, n, n, count)) out.push_back(t.times(0, i));
  }
  return out;
}

}  // namespace

void VectorPair::validate() const {
  if (degree < 0 || ambient < 0 || ambient > kMaxAmbient) {
    throw InfeasibleVectors("vector pair has degree " + std::to_string(degree) + " and ambient " +
                            std::to_string(ambient));
  }
  if (hv.size() != static_cast<std::size_t>(degree) + 1 || gv.size() != static_cast<std::size_t>(ambient) + 1) {
    throw InfeasibleVectors("hv must have length m+1 and gv length n+1");
  }
  for (auto x : hv) {
    if (x < 0) throw InfeasibleVectors("negative entry in hv " + vec_text(hv));
  }
  for (auto x : gv) {
    if (x < 0) throw InfeasibleVectors("negative entry in gv " + vec_text(gv));
  }
  const auto hv_tail = std::accumulate(hv.begin() + 1, hv.end(), std::int64_t{0});
  const auto gv_tail = std::accumulate(gv.begin() + 1, gv.end(), std::int64_t{0});
  if (gv[0] != hv_tail || hv[0] != gv_tail) {
    throw InfeasibleVectors("bucket identities fail for hv " + vec_text(hv) + ", gv " + vec_text(gv));
  }
  for (int i = 1; i <= ambient; ++i) {
    if (gv[static_cast<std::size_t>(i)] > count_terms(degree - 1, ambient - i + 1)) {
      throw InfeasibleVectors("gv[" + std::to_string(i) + "] exceeds the size of its growth class");
    }
  }
  for (int i = 1; i <= degree; ++i) {
    if (hv[static_cast<std::size_t>(i)] > count_terms(degree - i, ambient)) {
      throw InfeasibleVectors("hv[" + std::to_string(i) + "] exceeds the size of its height class");
    }
  }
}

VectorPair vectors_of(const BorelSet& b) {
  if (b.first_var() != 0) throw InvalidInput("vectors_of needs a Borel set over x0..xn");
  if (!is_borel(b)) throw NotBorel("vectors_of: the set is not Borel");
  VectorPair vp;
  vp.degree = b.degree();
  vp.ambient = b.ambient();
  vp.hv.assign(static_cast<std::size_t>(b.degree()) + 1, 0);
  vp.gv.assign(static_cast<std::size_t>(b.ambient()) + 1, 0);
  for (const auto& t : b.terms()) {
    ++vp.hv[static_cast<std::size_t>(t.exponent(0))];
    const int v = t.min_variable();
    ++vp.gv[static_cast<std::size_t>(v < 0 ? b.ambient() : v)];
  }
  return vp;
}

std::vector<std::int64_t> hv_from(const HilbertFunction& u, int m, int ambient_n) {
  if (m < 0) throw InvalidInput("hv_from: negative degree");
  if (ambient_n < 0 || ambient_n > kMaxAmbient) throw InvalidInput("hv_from: ambient out of range");
  std::vector<std::int64_t> hv(static_cast<std::size_t>(m) + 1, 0);
  for (int j = 1; j <= m; ++j) {
    const Integer value = count_terms(j, ambient_n) - (u(j) - u(j - 1));
    if (value < 0) {
      throw InfeasibleVectors("height class " + std::to_string(m - j) + " would be negative: u grows by " +
                              to_string(u(j) - u(j - 1)) + " in degree " + std::to_string(j));
    }
    hv[static_cast<std::size_t>(m - j)] = to_int64(value, "height vector entry");
  }
  const Integer top = Integer(1) - u(0);
  if (top < 0) throw InfeasibleVectors("u(0) exceeds 1");
  hv[static_cast<std::size_t>(m)] = to_int64(top, "height vector entry");
  return hv;
}

std::vector<std::int64_t> gv_from(const IntPolynomial& p, int m, int ambient_n) {
  if (m < 0) throw InvalidInput("gv_from: negative degree");
  if (ambient_n < 0 || ambient_n > kMaxAmbient) throw InvalidInput("gv_from: ambient out of range");
  const auto size = static_cast<std::size_t>(ambient_n) + 1;
  std::vector<Integer> y(size);
  for (std::size_t k = 0; k < size; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    y[k] = binomial(m + kk + ambient_n, ambient_n) - p(m + kk);
    for (std::size_t j = 0; j < k; ++j) y[k] -= binomial(kk, static_cast<std::int64_t>(j)) * y[j];
  }
  std::vector<Integer> x(size);
  for (std::size_t i = size; i-- > 0;) {
    x[i] = y[i];
    for (std::size_t l = i + 1; l < size; ++l) {
      x[i] -= binomial(static_cast<std::int64_t>(l), static_cast<std::int64_t>(i)) * x[l];
    }
  }
  std::vector<std::int64_t> gv(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (x[i] < 0) {
      throw InfeasibleVectors("growth class " + std::to_string(i) + " would have " + to_string(x[i]) +
                              " terms for " + to_string(p) + " in degree " + std::to_string(m));
    }
    gv[i] = to_int64(x[i], "growth vector entry");
  }
  return gv;
}

BorelSet ghl_construct(const VectorPair& vp) {
  vp.validate();
  BorelSet out(vp.degree, vp.ambient, 0, assemble(vp));
  if (!is_borel(out)) {
    throw NotBorel("no Borel set has hv " + vec_text(vp.hv) + " and gv " + vec_text(vp.gv));
  }
  if (vectors_of(out) != vp) {
    throw CertificationError("assembled set does not reproduce its vectors");
  }
  return out;
}

bool is_ghl(const BorelSet& b) {
  const VectorPair vp = vectors_of(b);
  return BorelSet(b.degree(), b.ambient(), 0, assemble(vp)) == b;
}

}  // namespace regrange
