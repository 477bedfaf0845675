#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "jackclust/clustercli/coalesce.hpp"
#include "jackclust/clustercli/report.hpp"
#include "jackclust/clustercli/scan.hpp"
#include "jackclust/errors.hpp"
#include "jackclust/jackcore/jack.hpp"
#include "jackclust/macdonald/macdonald.hpp"
#include "jackclust/mpoly/special.hpp"

using namespace jackclust;

namespace {

IdentityCase make(IdentityId id, std::map<std::string, int> p, std::vector<int> kappa = {}) {
  nlohmann::json j = case_to_json(IdentityCase{id});
  for (const auto& [k, v] : p) j[k] = v;
  if (!kappa.empty()) j["kappa"] = kappa;
  return case_from_json(j);
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("jackclust_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

bool has_nonzero_witness(const IdentityReport& r) {
  for (const auto& [name, f] : r.polys)
    if (!f.is_zero()) return true;
  return false;
}

}  // namespace

TEST_CASE("coalesced comparison matches direct substitution") {
  // P_(4,4,2,2,0,0)(z;−3) with z_5 = z_6 = z, against explicit substitution.
  AlphaMode mode = AlphaMode::at(BigRational(-3));
  Partition kappa({4, 4, 2, 2, 0, 0});
  MExpansion f = jack_symmetric_m(kappa, mode);
  Poly full = m_to_poly(f);
  const int keep = 4;
  std::vector<VarReplacement<FieldElement>> plan;
  for (int i = 0; i < 6; ++i) plan.push_back({FieldElement(1), i < keep ? i : keep});
  Poly g = substitute(full, plan, keep + 1);
  Poly factor = Poly::constant(keep + 1, FieldElement(1));
  for (int j = 0; j < keep; ++j) factor = factor * (Poly::variable(keep + 1, j) - Poly::variable(keep + 1, keep));
  MExpansion q = jack_symmetric_m(Partition({2, 2, 0, 0}), mode);
  for (int e : {1, 2}) {
    Poly rhs = factor.pow(static_cast<unsigned>(e)) * m_to_poly(q).with_nvars(keep + 1);
    std::vector<FieldElement> roots(e, FieldElement(1));
    CoalesceComparison cmp = compare_coalesced(f, {FieldElement(1), FieldElement(1)}, roots, q, false);
    CHECK(cmp.equal == (g == rhs));
  }
  CHECK(compare_coalesced(f, {FieldElement(1), FieldElement(1)}, {FieldElement(1), FieldElement(1)}, q, false).equal);

  // Dehomogenized form on a rectangular case: P_(2,2,0,0)(z;−3) at z_3 = z_4 = 1.
  MExpansion rect = jack_symmetric_m(Partition({2, 2, 0, 0}), mode);
  MExpansion one;
  one.n = 2;
  one.coef.emplace(Partition::zero(2), FieldElement(1));
  CHECK(compare_coalesced(rect, {FieldElement(1), FieldElement(1)}, {FieldElement(1), FieldElement(1)}, one, true).equal);
  CoalesceComparison bad =
      compare_coalesced(rect, {FieldElement(1), FieldElement(1)}, {FieldElement(1), FieldElement(2)}, one, true);
  CHECK_FALSE(bad.equal);
  CHECK_FALSE(bad.residual.is_zero());
}

TEST_CASE("coalesced comparison with distinct multipliers") {
  // Free w, coalesced 2z and 3z. e_1 → w + 5z = (w + 5z)·1.
  MExpansion q;
  q.n = 1;
  q.coef.emplace(Partition({0}), FieldElement(1));
  MExpansion e1;
  e1.n = 3;
  e1.coef.emplace(Partition({1, 0, 0}), FieldElement(1));
  CHECK(compare_coalesced(e1, {FieldElement(2), FieldElement(3)}, {FieldElement(-5)}, q, false).equal);
  // m_2 + e_2 → w^2 + 5wz + 19z^2 against (w + 2z)(w + 3z): residual 13z^2.
  MExpansion f;
  f.n = 3;
  f.coef.emplace(Partition({2, 0, 0}), FieldElement(1));
  f.coef.emplace(Partition({1, 1, 0}), FieldElement(1));
  CoalesceComparison cmp = compare_coalesced(f, {FieldElement(2), FieldElement(3)}, {FieldElement(-2), FieldElement(-3)}, q, false);
  CHECK_FALSE(cmp.equal);
  CHECK(cmp.residual == Poly::monomial(2, Monomial::from_exponents({0, 2}), FieldElement(13)));
}

TEST_CASE("registry names round trip") {
  CHECK(all_identities().size() == 20);
  for (IdentityId id : all_identities()) {
    CHECK(parse_identity(identity_name(id)) == id);
    CHECK_FALSE(identity_statement(id).empty());
  }
  CHECK_THROWS_AS(parse_identity("PROP9"), std::invalid_argument);
  CHECK(is_conjecture(IdentityId::QT_RR));
  CHECK_FALSE(is_conjecture(IdentityId::PROP1));
}

TEST_CASE("worked identity examples") {
  IdentityReport r = verify(make(IdentityId::PROP1, {{"r", 2}, {"n", 3}}, {1, 0, 0}));
  CHECK(r.verdict == Verdict::holds);
  r = verify(make(IdentityId::PROP2, {{"l", 1}, {"n", 3}}, {0, 0, 0}));
  CHECK(r.verdict == Verdict::holds);
  r = verify(make(IdentityId::CLUSTER25_1, {{"k", 1}, {"r", 2}, {"s", 2}, {"m", 1}, {"b", 1}}));
  CHECK(r.verdict == Verdict::holds);
  r = verify(make(IdentityId::RECT26, {{"r", 2}, {"g", 2}, {"n", 4}}));
  CHECK(r.verdict == Verdict::holds);
  r = verify(make(IdentityId::PFAFF, {{"n", 4}}));
  CHECK(r.verdict == Verdict::holds);
  REQUIRE(r.constants.count("ratio"));
  CHECK_FALSE(r.constants.at("ratio").is_zero());
  r = verify(make(IdentityId::PROP4, {{"r", 2}, {"n", 2}}, {0, 0}));
  CHECK(r.verdict == Verdict::holds);
  FieldElement p = FieldElement::indeterminate(Param::p, mask_of(Param::p));
  CHECK(r.constants.at("prefactor") == -p.inverse());
  r = verify(make(IdentityId::RR_J3A, {{"k", 2}, {"n", 4}}));
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.constants.at("ratio") == FieldElement(16));
  r = verify(make(IdentityId::LW_LM, {{"k", 2}, {"r", 2}, {"s", 1}, {"m", 2}, {"b", 1}}));
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.constants.at("n_phi") == FieldElement(4));
}

TEST_CASE("residual f of the nonsymmetric structures is reported") {
  IdentityReport r = verify(make(IdentityId::NONSYM26_1, {{"k", 1}, {"r", 2}, {"s", 2}, {"m", 1}, {"b", 1}}));
  CHECK(r.verdict == Verdict::holds);
  REQUIRE(r.polys.count("f"));
  CHECK(r.polys.at("f").total_degree() == 4);
  r = verify(make(IdentityId::NONSYM22_1, {{"l", 1}, {"n", 2}}, {0, 0}));
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.polys.at("f") == Poly::constant(2, FieldElement(1)));
  // A composition label is outside the claim.
  r = verify(make(IdentityId::NONSYM22_1, {{"l", 1}, {"n", 2}}, {1, 0}));
  CHECK(r.verdict == Verdict::holds);
}

TEST_CASE("conjecture verdicts") {
  IdentityReport r = verify(make(IdentityId::CONJ23_8, {{"k", 1}, {"r", 2}, {"s", 2}, {"m", 1}, {"b", 1}}));
  CHECK(r.verdict == Verdict::conjecture_consistent);
  r = verify(make(IdentityId::RECT_QT, {{"r", 2}, {"g", 2}, {"n", 4}}));
  CHECK(r.verdict == Verdict::conjecture_consistent);
  r = verify(make(IdentityId::QT_RR, {{"k", 2}, {"n", 4}}));
  CHECK(r.verdict == Verdict::conjecture_consistent);
  IdentityCase bad = make(IdentityId::QT_RR, {{"k", 2}, {"n", 4}});
  bad.perturb = Perturbation::exponent;
  r = verify(bad);
  CHECK(r.verdict == Verdict::conjecture_violated);
  CHECK(has_nonzero_witness(r));
}

TEST_CASE("preconditions give not-applicable") {
  CHECK(verify(make(IdentityId::PROP1, {{"r", 3}, {"n", 3}})).verdict == Verdict::not_applicable);
  CHECK(verify(make(IdentityId::PROP2, {{"l", 2}, {"n", 3}})).verdict == Verdict::not_applicable);
  CHECK(verify(make(IdentityId::RECT26, {{"r", 3}, {"g", 2}, {"n", 5}})).verdict == Verdict::not_applicable);
  CHECK(verify(make(IdentityId::CLUSTER25_1, {{"k", 1}, {"r", 3}, {"s", 1}, {"m", 1}, {"b", 0}})).verdict ==
        Verdict::not_applicable);
  CHECK(verify(make(IdentityId::LW_LM, {{"k", 1}, {"r", 2}, {"s", 2}, {"m", 1}, {"b", 0}})).verdict ==
        Verdict::not_applicable);
  CHECK(verify(make(IdentityId::PROP1, {{"r", 2}})).verdict == Verdict::not_applicable);
  CHECK(verify(make(IdentityId::PROP1, {{"r", 2}, {"n", 2}}, {1, 1, 1})).verdict == Verdict::not_applicable);
}

TEST_CASE("exponent perturbations never pass") {
  std::vector<IdentityCase> cases = {
      make(IdentityId::PROP1, {{"r", 2}, {"n", 3}}, {1, 0, 0}),
      make(IdentityId::PROP2, {{"l", 1}, {"n", 3}}, {1, 0, 0}),
      make(IdentityId::PROP3_H, {{"l", 1}, {"n", 2}}, {1, 0}),
      make(IdentityId::PROP3_L, {{"r", 2}, {"n", 2}}, {1, 0}),
      make(IdentityId::EQ14_1, {{"l", 1}, {"n", 3}}),
      make(IdentityId::EQ14_2, {{"r", 2}, {"n", 3}}),
      make(IdentityId::EQ12_1, {{"r", 2}, {"n", 3}}, {0, 0, 0}),
      make(IdentityId::PROP4, {{"r", 2}, {"n", 2}}, {1, 0}),
      make(IdentityId::CLUSTER25_1, {{"k", 1}, {"r", 2}, {"s", 2}, {"m", 1}, {"b", 1}}),
      make(IdentityId::RECT26, {{"r", 2}, {"g", 2}, {"n", 4}}),
      make(IdentityId::NONSYM26_1, {{"k", 1}, {"r", 2}, {"s", 2}, {"m", 1}, {"b", 1}}),
      make(IdentityId::NONSYM22_1, {{"l", 1}, {"n", 3}}, {1, 0, 0}),
      make(IdentityId::RR_J3A, {{"k", 2}, {"n", 4}}),
      make(IdentityId::PFAFF, {{"n", 4}}),
      make(IdentityId::HW_LP, {{"k", 1}, {"r", 2}, {"s", 1}, {"m", 1}, {"b", 1}}),
      make(IdentityId::LW_LM, {{"k", 1}, {"r", 2}, {"s", 1}, {"m", 1}, {"b", 1}}),
      make(IdentityId::B3B5, {{"k", 1}, {"r", 2}, {"s", 1}, {"m", 1}, {"b", 1}}),
      make(IdentityId::CONJ23_8, {{"k", 1}, {"r", 2}, {"s", 1}, {"m", 1}, {"b", 1}}),
      make(IdentityId::RECT_QT, {{"r", 2}, {"g", 1}, {"n", 3}}),
      make(IdentityId::QT_RR, {{"k", 1}, {"n", 3}}),
  };
  for (auto c : cases) {
    CAPTURE(c.key());
    REQUIRE(verify(c).verdict == (is_conjecture(c.id) ? Verdict::conjecture_consistent : Verdict::holds));
    for (Perturbation p : {Perturbation::exponent, Perturbation::parameter}) {
      c.perturb = p;
      CAPTURE(c.key());
      IdentityReport r = verify(c);
      CHECK(r.verdict != Verdict::holds);
      CHECK(r.verdict != Verdict::conjecture_consistent);
      if (r.verdict == Verdict::fails || r.verdict == Verdict::conjecture_violated) CHECK(has_nonzero_witness(r));
    }
  }
}

TEST_CASE("pole errors surface") {
  // Vanishing pivots with no finite limit.
  CHECK_THROWS_AS(jack_symmetric(Partition({2, 1, 0}), AlphaMode::at(BigRational(-2))), PoleError);
  CHECK_THROWS_AS(macdonald_symmetric(Partition({2, 1, 0}), QtMode::power(2, -1)), PoleError);
  IdentityReport r;
  r.verdict = Verdict::error;
  CHECK(is_failure(r.verdict));
}

TEST_CASE("report json round trip") {
  IdentityReport r = verify(make(IdentityId::PROP1, {{"r", 2}, {"n", 3}}, {1, 0, 0}));
  IdentityCase bad = make(IdentityId::PROP4, {{"r", 2}, {"n", 2}}, {0, 0});
  bad.perturb = Perturbation::exponent;
  IdentityReport f = verify(bad);
  for (const auto& rep : {r, f}) {
    IdentityReport back = report_from_json(nlohmann::json::parse(report_to_json(rep).dump()));
    CHECK(back.which.key() == rep.which.key());
    CHECK(back.verdict == rep.verdict);
    CHECK(back.polys == rep.polys);
    CHECK(back.constants.size() == rep.constants.size());
    for (const auto& [k, v] : rep.constants) CHECK(back.constants.at(k) == v);
  }
  nlohmann::json broken = report_to_json(f);
  broken["witnesses"] = nlohmann::json::object();
  CHECK_THROWS_AS(report_from_json(broken), ParseError);
  CHECK(report_to_text(f).find("fails") != std::string::npos);
}

TEST_CASE("cache round trips and discards corrupt entries") {
  auto dir = fresh_dir("cache");
  ResultCache cache(dir);
  Poly jack = jack_symmetric(Partition({2, 0}), AlphaMode::generic());
  Poly mac = macdonald_symmetric(Partition({2, 1, 0}), QtMode::generic());
  cache.store_poly("jack", jack);
  cache.store_poly("mac", mac);
  CHECK(*cache.load_poly("jack") == jack);
  CHECK(*cache.load_poly("mac") == mac);
  CHECK_FALSE(cache.load_poly("absent"));

  // Truncated entry: discarded and recomputed.
  auto path = cache.path_for("jack");
  std::string text;
  {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  {
    std::ofstream out(path, std::ios::trunc);
    out << text.substr(0, text.size() / 2);
  }
  CHECK_FALSE(cache.load_poly("jack"));
  CHECK_FALSE(std::filesystem::exists(path));
  int calls = 0;
  Poly again = cache.get_or_compute_poly("jack", [&] {
    ++calls;
    return jack;
  });
  CHECK(calls == 1);
  CHECK(again == jack);
  cache.get_or_compute_poly("jack", [&] {
    ++calls;
    return jack;
  });
  CHECK(calls == 1);

  // Payload altered without touching the frame length: the hash check rejects it.
  {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  auto pos = text.find("{2[0]}");
  REQUIRE(pos != std::string::npos);
  text[pos + 1] = '3';
  {
    std::ofstream out(path, std::ios::trunc);
    out << text;
  }
  CHECK_FALSE(cache.load_poly("jack"));
  for (const auto& e : std::filesystem::directory_iterator(dir))
    CHECK(e.path().string().find(".tmp.") == std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("scan enumeration") {
  ScanConfig empty = parse_scan_config(nlohmann::json::parse(R"({"cases":[{"id":"PROP1","r":[3,5],"n":3,"kappa_max":1}]})"));
  CHECK(enumerate_cases(empty).empty());
  CHECK(scan(empty).reports.empty());

  ScanConfig prop1 =
      parse_scan_config(nlohmann::json::parse(R"({"cases":[{"id":"PROP1","r":[2,4],"n":[3,4],"kappa_max":3}]})"));
  auto cases = enumerate_cases(prop1);
  // Partitions of 0..3 with at most 3 parts: 1+1+2+3 = 7; with at most 4 parts: 7.
  CHECK(cases.size() == 2 * (7 + 7));
  CHECK(cases.front().key() == "PROP1 r=2 n=3 kappa=0,0,0");

  ScanConfig stair = parse_scan_config(
      nlohmann::json::parse(R"({"cases":[{"id":"CLUSTER25_1","k":[1,2],"r":[2,3],"s":[1,2],"n_max":5}]})"));
  auto sc = enumerate_cases(stair);
  for (const auto& c : sc) CHECK(admissible(c));
  CHECK(std::none_of(sc.begin(), sc.end(), [](const IdentityCase& c) { return *c.k == 1 && *c.r == 3; }));
  CHECK_THROWS_AS(enumerate_cases(parse_scan_config(nlohmann::json::parse(R"({"cases":[{"id":"HW_LP","k":1,"r":2,"s":1}]})"))),
                  ParseError);
  CHECK_THROWS_AS(parse_scan_config(nlohmann::json::parse(R"({"cases":[{"id":"NOPE"}]})")), ParseError);
}

TEST_CASE("scan is deterministic and resumable") {
  auto dir = fresh_dir("scan");
  ScanConfig cfg = parse_scan_config(nlohmann::json::parse(
      R"({"jobs":2,"cases":[{"id":"PROP1","r":2,"n":3,"kappa_max":2},{"id":"RECT26","r":2,"g":[1,2],"n":[3,4]}]})"));
  ResultCache cache(dir);
  ScanResult first = scan(cfg, &cache);
  ScanResult second = scan(cfg, &cache);
  ScanResult cold = scan(cfg);
  REQUIRE(first.reports.size() == second.reports.size());
  REQUIRE(first.reports.size() == cold.reports.size());
  for (std::size_t i = 0; i < first.reports.size(); ++i) {
    CHECK(first.reports[i].which.key() == second.reports[i].which.key());
    CHECK(first.reports[i].which.key() == cold.reports[i].which.key());
    CHECK(first.reports[i].verdict == cold.reports[i].verdict);
    CHECK(first.reports[i].polys == cold.reports[i].polys);
    CHECK_FALSE(first.reports[i].from_cache);
    CHECK(second.reports[i].from_cache);
    CHECK(second.reports[i].verdict == Verdict::holds);
  }
  cfg.budget_seconds = 0;
  ScanResult none = scan(cfg);
  CHECK(none.reports.empty());
  CHECK(none.skipped == first.reports.size());
  std::filesystem::remove_all(dir);
}
