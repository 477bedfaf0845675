#pragma once

#include <string>
#include <vector>

#include "jackclust/clustercli/identity.hpp"
#include "json.hpp"

namespace jackclust {

// One record per case: id, parameters, verdict, statement, timing in milliseconds, witness
// polynomials in canonical serialization and constants as {"value", "field", "pretty"}.
nlohmann::json report_to_json(const IdentityReport& r);
IdentityReport report_from_json(const nlohmann::json& j);  // throws ParseError

nlohmann::json case_to_json(const IdentityCase& c);
IdentityCase case_from_json(const nlohmann::json& j);  // scalar parameters only; throws ParseError

std::string report_to_text(const IdentityReport& r);
std::string reports_to_text(const std::vector<IdentityReport>& rs);

// True when the verdict blocks a clean exit: fails, conjecture-violated or error.
bool is_failure(Verdict v);

}  // namespace jackclust
