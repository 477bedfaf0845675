// Runs the thirteen acceptance criteria and prints one PASS/FAIL line for each.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include "jackclust/clustercli/report.hpp"
#include "jackclust/clustercli/scan.hpp"
#include "jackclust/errors.hpp"
#include "jackclust/hermlag/hermlag.hpp"
#include "jackclust/jackcore/jack.hpp"
#include "jackclust/macdonald/macdonald.hpp"
#include "jackclust/mpoly/special.hpp"
#include "jackclust/partlib/kappa.hpp"

using namespace jackclust;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Every partition of size ≤ max_size with at most n parts, padded to n.
std::vector<Partition> partitions_up_to(int max_size, int n) {
  std::vector<Partition> out;
  std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& parts, int left, int cap) {
    std::vector<int> padded = parts;
    padded.resize(n, 0);
    out.emplace_back(padded);
    if (static_cast<int>(parts.size()) == n) return;
    for (int v = std::min(left, cap); v >= 1; --v) {
      parts.push_back(v);
      rec(parts, left - v, v);
      parts.pop_back();
    }
  };
  std::vector<int> parts;
  rec(parts, max_size, max_size);
  return out;
}

// det(z_i^{κ_j+N−j}) / Δ(z).
Poly schur_bialternant(const Partition& kappa) {
  const int n = kappa.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly det(n);
  do {
    std::vector<int> e(n);
    for (int j = 0; j < n; ++j) e[perm[j]] = kappa[j] + n - 1 - j;
    det += Poly::monomial(n, Monomial::from_exponents(e), FieldElement(detail::permutation_sign(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return divide_or_throw(det, vandermonde<FieldElement>(n), "schur_bialternant");
}

bool has_nonzero_witness(const IdentityReport& r) {
  for (const auto& [name, f] : r.polys)
    if (!f.is_zero()) return true;
  return false;
}

// Runs a scan configuration and requires the expected verdict on every case.
Outcome expect_all(const std::string& config, Verdict expected, bool dump_witnesses = false) {
  ScanConfig cfg = parse_scan_config(nlohmann::json::parse(config));
  ScanResult res = scan(cfg);
  Outcome o;
  std::map<std::string, int> tally;
  for (const auto& r : res.reports) {
    ++tally[verdict_name(r.verdict)];
    if (r.verdict != expected) {
      o.pass = false;
      std::cerr << report_to_text(r) << "\n";
      if (dump_witnesses) std::cerr << report_to_json(r).dump(2) << "\n";
    }
  }
  if (res.skipped) o.pass = false;
  std::ostringstream d;
  d << res.reports.size() << " cases";
  for (const auto& [v, n] : tally) d << ' ' << v << '=' << n;
  if (res.skipped) d << " skipped=" << res.skipped;
  if (res.reports.empty()) o.pass = false;
  o.detail = d.str();
  return o;
}

void merge(Outcome& into, const Outcome& part, const std::string& label) {
  into.pass = into.pass && part.pass;
  into.detail += (into.detail.empty() ? "" : "; ") + label + ": " + part.detail;
}

IdentityCase make(IdentityId id, std::map<std::string, int> p, std::vector<int> kappa = {}) {
  nlohmann::json j = case_to_json(IdentityCase{id});
  for (const auto& [k, v] : p) j[k] = v;
  if (!kappa.empty()) j["kappa"] = kappa;
  return case_from_json(j);
}

Outcome criterion1() {
  Outcome o;
  int count = 0;
  for (int n = 1; n <= 4; ++n)
    for (const Partition& kappa : partitions_up_to(6, n)) {
      ++count;
      if (jack_symmetric(kappa, AlphaMode::at(BigRational(1))) != schur_bialternant(kappa)) {
        o.pass = false;
        std::cerr << "P_" << kappa.to_string() << "(z;1) differs from the Schur bialternant\n";
      }
      if (jack_symmetric_m(kappa, AlphaMode::generic(), JackMethod::cherednik).coef !=
          jack_symmetric_m(kappa, AlphaMode::generic(), JackMethod::sutherland).coef) {
        o.pass = false;
        std::cerr << "Cherednik and Sutherland routes differ at " << kappa.to_string() << "\n";
      }
    }
  o.detail = std::to_string(count) + " partitions, Schur at alpha=1 and Cherednik = Sutherland at generic alpha";
  return o;
}

Outcome criterion2() {
  return expect_all(R"({"cases":[{"id":"PROP1","r":[2,4],"n":[3,4],"kappa_max":3}]})", Verdict::holds);
}

Outcome criterion3() {
  Outcome o;
  merge(o, expect_all(R"({"cases":[{"id":"PROP2","l":[1,3],"n":3,"kappa_max":3}]})", Verdict::holds), "PROP2");
  merge(o, expect_all(R"({"cases":[{"id":"EQ14_1","l":[1,3],"n":3}]})", Verdict::holds), "EQ14_1");
  return o;
}

Outcome criterion4() {
  Outcome o;
  merge(o,
        expect_all(R"({"cases":[{"id":"PROP3_H","l":[1,3],"n":3,"kappa_max":2},
                                {"id":"PROP3_H","r":[2,4],"n":3,"kappa_max":2}]})",
                   Verdict::holds),
        "PROP3_H");
  merge(o,
        expect_all(R"({"cases":[{"id":"PROP3_L","l":[1,3],"n":3,"kappa_max":2},
                                {"id":"PROP3_L","r":[2,4],"n":3,"kappa_max":2}]})",
                   Verdict::holds),
        "PROP3_L");
  merge(o, expect_all(R"({"cases":[{"id":"EQ14_2","r":[2,4],"n":3}]})", Verdict::holds), "EQ14_2");
  return o;
}

Outcome criterion5() {
  Outcome o;
  int count = 0;
  for (int n = 1; n <= 3; ++n)
    for (const Partition& kappa : partitions_up_to(2, n)) {
      ++count;
      if (laguerre_symmetric(kappa, AlphaMode::generic(), LaguerreParam::symbolic()) !=
          laguerre_binomial(kappa, AlphaMode::generic(), LaguerreParam::symbolic())) {
        o.pass = false;
        std::cerr << "Laguerre routes differ at " << kappa.to_string() << "\n";
      }
    }
  o.detail = std::to_string(count) + " partitions over Q(a,alpha)";
  return o;
}

Outcome criterion6() {
  Outcome o;
  merge(o, expect_all(R"({"cases":[{"id":"PROP4","r":2,"n":[2,3],"kappa":["0","1","2","1,1"]}]})", Verdict::holds),
        "PROP4");
  // P_(2,0)(z;q,q^{−1/2}) with q = p²: the m_(1,1) coefficient is −q^{−1/2}(1+q) = −p^{−1}(1+p²).
  Poly f = macdonald_symmetric(Partition({2, 0}), QtMode::power(2, -1));
  FieldElement p = FieldElement::indeterminate(Param::p, mask_of(Param::p));
  FieldElement expected = -(p.inverse() * (FieldElement(1) + p * p));
  FieldElement got = f.coefficient(Monomial::from_exponents({1, 1}));
  const bool ok = got == expected;
  o.pass = o.pass && ok;
  o.detail += "; m_(1,1) coefficient at N=2 = " + got.pretty();
  return o;
}

const char* kStaircase = R"({"id":"%s","k":{"min":1,"max":2},"r":{"min":2,"max":3},"s":{"min":1,"max":2},"n_max":8})";

std::string staircase_config(const std::string& id) {
  std::string body = kStaircase;
  body.replace(body.find("%s"), 2, id);
  return R"({"cases":[)" + body + "]}";
}

Outcome criterion7() {
  Outcome o = expect_all(staircase_config("CLUSTER25_1"), Verdict::holds);
  // κ(1,2,2,1) with one interior block: direct substitution and division.
  KappaSpec spec = build_kappa(1, 2, 2, 1, 1);
  const int n = spec.kappa.size(), keep = n - spec.n0;
  Poly f = jack_symmetric(spec.kappa, AlphaMode::at(spec.alpha));
  std::vector<VarReplacement<FieldElement>> plan;
  for (int i = 0; i < n; ++i) plan.push_back({FieldElement(1), i < keep ? i : keep});
  Poly g = substitute(f, plan, keep + 1);
  Poly factor = Poly::constant(keep + 1, FieldElement(1));
  for (int j = 0; j < keep; ++j) factor = factor * (Poly::variable(keep + 1, j) - Poly::variable(keep + 1, keep));
  Poly rhs = factor.pow(3) * jack_symmetric(Partition({2, 0}), AlphaMode::at(spec.alpha)).with_nvars(keep + 1);
  const bool ok = keep == 2 && reduced_kappa(spec.kappa) == Partition({2, 0}) && g == rhs;
  o.pass = o.pass && ok;
  o.detail += "; kappa(1,2,2,1) = " + spec.kappa.to_string() + (ok ? " factors" : " does not factor") +
              " as (z1-z)^3 (z2-z)^3 P_(2,0)";
  return o;
}

Outcome criterion8() {
  Outcome o = expect_all(R"({"cases":[{"id":"RECT26","r":2,"g":2,"n":[4,5]}]})", Verdict::holds);
  // gcd(N+1−g, r−1) = gcd(4, 2) ≠ 1.
  IdentityReport r = verify(make(IdentityId::RECT26, {{"r", 3}, {"g", 2}, {"n", 5}}));
  o.pass = o.pass && r.verdict == Verdict::not_applicable;
  o.detail += "; (3,2,5) " + verdict_name(r.verdict);
  return o;
}

Outcome criterion9() {
  Outcome o;
  IdentityReport rr = verify(make(IdentityId::RR_J3A, {{"k", 2}, {"n", 4}}));
  IdentityReport pf = verify(make(IdentityId::PFAFF, {{"n", 4}}));
  for (const IdentityReport* r : {&rr, &pf}) {
    const bool ok = r->verdict == Verdict::holds && r->constants.count("ratio") && !r->constants.at("ratio").is_zero();
    if (!ok) std::cerr << report_to_text(*r) << "\n";
    o.pass = o.pass && ok;
  }
  if (o.pass) {
    const FieldElement a = rr.constants.at("ratio"), b = pf.constants.at("ratio");
    o.detail = "Sym product = " + a.pretty() + " * P_(2,2,0,0)(z;-3), Pf * Delta = " + b.pretty() +
               " * P_(2,2,0,0)(z;-3), Sym product / (Pf * Delta) = " + (a / b).pretty();
  } else {
    o.detail = "not proportional";
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  merge(o, expect_all(staircase_config("HW_LP"), Verdict::holds), "HW_LP");
  merge(o, expect_all(staircase_config("LW_LM"), Verdict::holds), "LW_LM");
  return o;
}

Outcome criterion11() {
  return expect_all(R"({"halt_on_violation":true,"cases":[
      {"id":"CONJ23_8","k":{"min":1,"max":2},"r":{"min":2,"max":3},"s":{"min":1,"max":2},"n_max":6},
      {"id":"RECT_QT","r":{"min":2,"max":3},"g":{"min":1,"max":6},"n":{"min":2,"max":6}},
      {"id":"QT_RR","k":{"min":1,"max":2},"n":{"min":2,"max":6}}]})",
                    Verdict::conjecture_consistent, true);
}

Outcome criterion12() {
  std::vector<IdentityCase> base = {
      make(IdentityId::PROP1, {{"r", 2}, {"n", 3}}, {1, 0, 0}),
      make(IdentityId::PROP1, {{"r", 4}, {"n", 3}}, {0, 0, 0}),
      make(IdentityId::PROP2, {{"l", 1}, {"n", 3}}, {1, 0, 0}),
      make(IdentityId::PROP2, {{"l", 3}, {"n", 3}}, {0, 0, 0}),
      make(IdentityId::EQ14_1, {{"l", 1}, {"n", 3}}),
      make(IdentityId::PROP3_H, {{"l", 1}, {"n", 3}}, {1, 0, 0}),
      make(IdentityId::PROP3_H, {{"r", 2}, {"n", 3}}, {1, 0, 0}),
      make(IdentityId::PROP3_L, {{"l", 1}, {"n", 3}}, {1, 0, 0}),
      make(IdentityId::PROP3_L, {{"r", 2}, {"n", 3}}, {1, 0, 0}),
      make(IdentityId::EQ14_2, {{"r", 2}, {"n", 3}}),
      make(IdentityId::PROP4, {{"r", 2}, {"n", 2}}, {0, 0}),
      make(IdentityId::PROP4, {{"r", 2}, {"n", 3}}, {1, 0, 0}),
      make(IdentityId::CLUSTER25_1, {{"k", 1}, {"r", 2}, {"s", 2}, {"m", 1}, {"b", 1}}),
      make(IdentityId::CLUSTER25_1, {{"k", 2}, {"r", 2}, {"s", 1}, {"m", 2}, {"b", 1}}),
      make(IdentityId::RECT26, {{"r", 2}, {"g", 2}, {"n", 4}}),
      make(IdentityId::RECT26, {{"r", 3}, {"g", 2}, {"n", 5}}),
      make(IdentityId::RR_J3A, {{"k", 2}, {"n", 4}}),
      make(IdentityId::PFAFF, {{"n", 4}}),
  };
  Outcome o;
  int runs = 0, vacuous = 0;
  for (IdentityCase c : base) {
    for (Perturbation p : {Perturbation::exponent, Perturbation::parameter}) {
      c.perturb = p;
      IdentityReport r = verify(c);
      ++runs;
      const bool ok = r.verdict == Verdict::not_applicable || (r.verdict == Verdict::fails && has_nonzero_witness(r));
      if (!ok) {
        ++vacuous;
        std::cerr << report_to_text(r) << "\n";
      }
    }
  }
  // Laguerre cross-oracle with a = 0 on one side and a = 1 on the other.
  for (const Partition& kappa : {Partition({1, 0}), Partition({2, 0}), Partition({1, 1, 0})}) {
    ++runs;
    Poly exp_route = laguerre_symmetric(kappa, AlphaMode::generic(), LaguerreParam::at(BigRational(0)));
    Poly shifted = laguerre_binomial(kappa, AlphaMode::generic(), LaguerreParam::at(BigRational(1)));
    if ((exp_route - shifted).is_zero()) ++vacuous;
  }
  o.pass = vacuous == 0;
  o.detail = std::to_string(runs) + " perturbed runs, " + std::to_string(vacuous) + " vacuous passes";
  return o;
}

Outcome criterion13() {
  Outcome o;
  int raised = 0, total = 0;
  struct Case {
    Partition kappa;
    BigRational alpha;
  };
  for (const Case& c : {Case{Partition({2, 0}), BigRational(-1)}, Case{Partition({3, 0}), BigRational(-1, 2)},
                        Case{Partition({4, 0}), BigRational(-1, 3)}, Case{Partition({2, 1, 0}), BigRational(-2)}}) {
    ++total;
    try {
      jack_symmetric(c.kappa, AlphaMode::at(c.alpha));
      std::cerr << "P_" << c.kappa.to_string() << " at alpha=" << c.alpha.to_string() << " returned a polynomial\n";
    } catch (const PoleError&) {
      ++raised;
    }
  }
  o.pass = raised == total;
  o.detail = std::to_string(raised) + "/" + std::to_string(total) + " pole requests raised PoleError";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Jack baseline", criterion1},
      {"even-r shift (symmetric Jack)", criterion2},
      {"odd-l shift (nonsymmetric Jack)", criterion3},
      {"shifts for Hermite and Laguerre", criterion4},
      {"Laguerre exponential vs binomial", criterion5},
      {"Macdonald shift", criterion6},
      {"clustering factorization", criterion7},
      {"rectangular clustering", criterion8},
      {"Read-Rezayi and Pfaffian", criterion9},
      {"highest and lowest weight", criterion10},
      {"conjecture scans", criterion11},
      {"negative controls", criterion12},
      {"pole discipline", criterion13},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << "criterion " << std::setw(2) << i + 1 << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first
              << " (" << std::fixed << std::setprecision(1) << secs << " s): " << o.detail << std::endl;
  }
  return failed ? 1 : 0;
}
