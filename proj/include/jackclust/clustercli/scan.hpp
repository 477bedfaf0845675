#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jackclust/clustercli/cache.hpp"
#include "jackclust/clustercli/identity.hpp"
#include "json.hpp"

namespace jackclust {

// Parameter ranges for one identity. Empty vectors mean "not used"; b may instead be bounded
// by n_max, and m defaults to 1..k for the staircase identities.
struct ScanRange {
  IdentityId id = IdentityId::PROP1;
  std::vector<int> k, r, s, m, b, n, l, g;
  std::optional<int> kappa_max;        // every partition with |κ| ≤ kappa_max and at most N parts
  std::vector<Partition> kappas;       // explicit labels
  std::optional<int> n_max;            // bound on the total number of variables
  Perturbation perturb = Perturbation::none;
};

struct ScanConfig {
  std::vector<ScanRange> ranges;
  std::optional<double> budget_seconds;
  int jobs = 1;
  bool halt_on_violation = false;
  std::optional<std::string> cache_dir;
};

// {"budget_seconds", "jobs", "halt_on_violation", "cache", "cases": [{"id", "k": 1 | [1,2] |
// {"min","max"}, …, "kappa_max", "kappa": ["2,1"], "n_max", "perturb"}]}. Throws ParseError.
ScanConfig parse_scan_config(const nlohmann::json& j);

// Cheap precondition check; inadmissible cases are left out of a scan.
bool admissible(const IdentityCase& c);
// Admissible cases in deterministic order.
std::vector<IdentityCase> enumerate_cases(const ScanConfig& cfg);

struct ScanResult {
  std::vector<IdentityReport> reports;
  std::size_t skipped = 0;  // cases not run because of the budget or a halt
};

// Runs every case, reusing cached reports when a cache is given and storing new ones.
ScanResult scan(const ScanConfig& cfg, ResultCache* cache = nullptr);

// Runs one case through the cache.
IdentityReport verify_cached(const IdentityCase& c, ResultCache* cache);

}  // namespace jackclust
