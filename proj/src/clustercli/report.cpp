#include "jackclust/clustercli/report.hpp"

#include <iomanip>
#include <sstream>

#include "jackclust/errors.hpp"

namespace jackclust {

namespace {

const char* const kIntParams[] = {"k", "r", "s", "m", "b", "n", "l", "g"};

std::optional<int>* slot(IdentityCase& c, const std::string& name) {
  if (name == "k") return &c.k;
  if (name == "r") return &c.r;
  if (name == "s") return &c.s;
  if (name == "m") return &c.m;
  if (name == "b") return &c.b;
  if (name == "n") return &c.n;
  if (name == "l") return &c.l;
  if (name == "g") return &c.g;
  return nullptr;
}

const std::optional<int>& slot(const IdentityCase& c, const std::string& name) {
  return *slot(const_cast<IdentityCase&>(c), name);
}

std::string perturb_name(Perturbation p) {
  switch (p) {
    case Perturbation::none: return "none";
    case Perturbation::exponent: return "exponent";
    case Perturbation::parameter: return "parameter";
  }
  return "none";
}

Perturbation parse_perturb(const std::string& s) {
  if (s == "none") return Perturbation::none;
  if (s == "exponent") return Perturbation::exponent;
  if (s == "parameter") return Perturbation::parameter;
  throw ParseError("unknown perturbation: " + s);
}

}  // namespace

bool is_failure(Verdict v) { return v == Verdict::fails || v == Verdict::conjecture_violated || v == Verdict::error; }

nlohmann::json case_to_json(const IdentityCase& c) {
  nlohmann::json j;
  j["id"] = identity_name(c.id);
  for (const char* p : kIntParams)
    if (const auto& v = slot(c, p)) j[p] = *v;
  if (c.kappa) j["kappa"] = c.kappa->parts();
  if (c.perturb != Perturbation::none) j["perturb"] = perturb_name(c.perturb);
  return j;
}

IdentityCase case_from_json(const nlohmann::json& j) {
  try {
    IdentityCase c;
    c.id = parse_identity(j.at("id").get<std::string>());
    for (const char* p : kIntParams)
      if (j.contains(p)) *slot(c, p) = j.at(p).get<int>();
    if (j.contains("kappa")) {
      const auto& kj = j.at("kappa");
      c.kappa = kj.is_string() ? parse_partition(kj.get<std::string>()) : Partition(kj.get<std::vector<int>>());
    }
    if (j.contains("perturb")) c.perturb = parse_perturb(j.at("perturb").get<std::string>());
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad case record: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad case record: ") + e.what());
  }
}

nlohmann::json report_to_json(const IdentityReport& r) {
  nlohmann::json j;
  j["case"] = case_to_json(r.which);
  j["key"] = r.which.key();
  j["verdict"] = verdict_name(r.verdict);
  j["statement"] = identity_statement(r.which.id);
  j["timing_ms"] = r.timing_ms;
  if (!r.note.empty()) j["note"] = r.note;
  nlohmann::json w = nlohmann::json::object();
  for (const auto& [name, f] : r.polys) w[name] = serialize(f);
  j["witnesses"] = w;
  nlohmann::json cs = nlohmann::json::object();
  for (const auto& [name, v] : r.constants)
    cs[name] = {{"value", v.serialize()}, {"field", mask_to_string(v.field())}, {"pretty", v.pretty()}};
  j["constants"] = cs;
  return j;
}

IdentityReport report_from_json(const nlohmann::json& j) {
  try {
    IdentityReport r;
    r.which = case_from_json(j.at("case"));
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    r.timing_ms = j.at("timing_ms").get<double>();
    if (j.contains("note")) r.note = j.at("note").get<std::string>();
    for (const auto& [name, text] : j.at("witnesses").items()) r.polys[name] = deserialize_poly(text.get<std::string>());
    for (const auto& [name, v] : j.at("constants").items())
      r.constants.emplace(name, FieldElement::deserialize(v.at("value").get<std::string>(),
                                                          mask_from_string(v.at("field").get<std::string>())));
    if (r.verdict == Verdict::fails && r.polys.empty()) throw ParseError("fails record without a witness");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad report record: ") + e.what());
  }
}

std::string report_to_text(const IdentityReport& r) {
  std::ostringstream out;
  out << std::left << std::setw(24) << verdict_name(r.verdict) << r.which.key() << "  (" << std::fixed
      << std::setprecision(1) << r.timing_ms << " ms" << (r.from_cache ? ", cached" : "") << ")";
  for (const auto& [name, v] : r.constants) out << "\n    " << name << " = " << v.pretty();
  for (const auto& [name, f] : r.polys) {
    std::string p = pretty(f);
    if (p.size() > 400) p = p.substr(0, 400) + " ... (" + std::to_string(f.size()) + " terms)";
    out << "\n    " << name << ": " << p;
  }
  if (!r.note.empty()) out << "\n    note: " << r.note;
  return out.str();
}

std::string reports_to_text(const std::vector<IdentityReport>& rs) {
  std::ostringstream out;
  std::map<std::string, int> tally;
  for (const auto& r : rs) {
    out << report_to_text(r) << "\n";
    ++tally[verdict_name(r.verdict)];
  }
  out << rs.size() << " cases:";
  for (const auto& [v, n] : tally) out << ' ' << v << '=' << n;
  out << "\n";
  return out.str();
}

}  // namespace jackclust
