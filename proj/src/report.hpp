#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "regrange/monomial.hpp"
#include "regrange/oracle.hpp"
#include "regrange/selfcheck.hpp"

namespace regrange::report {

/// Text plus a verdict for reports that can fail without throwing.
struct Outcome {
  std::string text;
  bool ok = true;
};

nlohmann::ordered_json ideal_json(const MonomialIdeal& ideal);

std::string range(const std::string& hf, std::optional<int> ambient, bool json);
std::string construct(const std::string& hf, std::int64_t m, std::optional<int> ambient, bool json);
std::string algebraic(const std::string& hf, std::int64_t a, bool json);
std::string lex(const std::string& hf, std::optional<int> ambient, bool json);
std::string minfun(const std::string& poly, std::int64_t rho, bool use_g, bool json);
std::string gotzmann(const std::string& poly, bool json);
std::string vectors(const std::string& hf, std::int64_t m, std::optional<int> ambient, bool json);
Outcome enumerate(const std::string& hf, std::optional<int> ambient, const EnumerationOptions& opts, bool json);
Outcome selfcheck(const SelfcheckOptions& opts, bool json);
Outcome verify_certificate(const std::string& json_text, bool json);

}  // namespace regrange::report
