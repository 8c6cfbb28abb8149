#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "regrange/hilbert.hpp"
#include "regrange/minfun.hpp"
#include "regrange/monomial.hpp"

namespace regrange {

/// Default bound on C(M_u + n, n); REGRANGE_ENUM_CAP overrides it.
std::uint64_t default_enumeration_cap();

struct EnumerationOptions {
  std::uint64_t cap = default_enumeration_cap();
  unsigned threads = 1;
};

struct Enumeration {
  std::vector<MonomialIdeal> ideals;  ///< sorted by generator exponent lists
  /// Candidates matching u through degree M_u but not afterwards.
  std::uint64_t rejected_tail = 0;
};

/// Every saturated strongly stable ideal of x_0..x_n with Hilbert function u,
/// by depth-first extension of Borel sets degree by degree.
Enumeration enumerate_saturated_ss(const HilbertFunction& u, int ambient_n,
                                   const EnumerationOptions& opts = {});

std::vector<std::int64_t> regularity_spectrum(const HilbertFunction& u, int ambient_n,
                                              const EnumerationOptions& opts = {});

struct MainTheoremReport {
  HilbertFunction u;
  int ambient = 0;
  RegularityRange range;
  std::vector<std::int64_t> spectrum;
  std::map<std::int64_t, std::size_t> count_by_regularity;
  std::vector<std::pair<std::int64_t, MonomialIdeal>> witnesses;
  std::uint64_t rejected_tail = 0;
  bool pass = false;
  std::string failure;  ///< empty on success
};

/// Checks that the enumerated spectrum is exactly [m_u, M_u] and that each
/// constructed witness appears in the enumeration.
MainTheoremReport verify_main_theorem(const HilbertFunction& u, int ambient_n,
                                      const EnumerationOptions& opts = {});

}  // namespace regrange
