#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jackclust/mpoly/serialize.hpp"
#include "jackclust/partlib/partition.hpp"

namespace jackclust {

enum class IdentityId {
  PROP1,
  PROP2,
  PROP3_H,
  PROP3_L,
  EQ14_1,
  EQ14_2,
  EQ12_1,
  PROP4,
  CLUSTER25_1,
  RECT26,
  NONSYM26_1,
  NONSYM22_1,
  RR_J3A,
  PFAFF,
  HW_LP,
  LW_LM,
  B3B5,
  CONJ23_8,
  RECT_QT,
  QT_RR,
};

const std::vector<IdentityId>& all_identities();
std::string identity_name(IdentityId id);
IdentityId parse_identity(const std::string& name);  // throws std::invalid_argument
bool is_conjecture(IdentityId id);
// ASCII statement of the identity checked for this id.
std::string identity_statement(IdentityId id);

// A control case breaks the identity on purpose: the claimed exponent is raised by one, or
// the Jack/Macdonald parameter is moved off the claimed value.
enum class Perturbation { none, exponent, parameter };

struct IdentityCase {
  IdentityId id = IdentityId::PROP1;
  std::optional<int> k, r, s, m, b, n, l, g;
  std::optional<Partition> kappa;
  Perturbation perturb = Perturbation::none;

  // Stable text key, e.g. "PROP1 r=2 n=3 kappa=1,0,0".
  std::string key() const;
};

enum class Verdict { holds, fails, not_applicable, conjecture_consistent, conjecture_violated, error };

std::string verdict_name(Verdict v);
Verdict parse_verdict(const std::string& s);

struct IdentityReport {
  IdentityCase which;
  Verdict verdict = Verdict::not_applicable;
  // Named witness polynomials (residuals, reported quotients) and constants.
  std::map<std::string, Poly> polys;
  std::map<std::string, FieldElement> constants;
  std::string note;
  double timing_ms = 0;
  bool from_cache = false;
};

// Builds both sides exactly and compares them. Precondition failures give not_applicable;
// pole errors and internal errors give an error verdict whose note names the cause.
IdentityReport verify(const IdentityCase& c);

}  // namespace jackclust
