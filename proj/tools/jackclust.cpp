#include <fstream>
#include <iostream>
#include <regex>

#include "CLI11.hpp"
#include "jackclust/clustercli/report.hpp"
#include "jackclust/clustercli/scan.hpp"
#include "jackclust/errors.hpp"
#include "jackclust/hermlag/hermlag.hpp"
#include "jackclust/jackcore/jack.hpp"
#include "jackclust/macdonald/macdonald.hpp"

using namespace jackclust;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

const std::vector<std::string> kFamilies = {"jack-nonsym",     "jack-sym",       "jack-antisym",
                                            "hermite-nonsym",  "hermite-sym",    "laguerre-nonsym",
                                            "laguerre-sym",    "macdonald-nonsym", "macdonald-sym",
                                            "macdonald-antisym"};

AlphaMode parse_alpha(const std::string& text) {
  if (text.empty() || text == "generic") return AlphaMode::generic();
  return AlphaMode::at(BigRational::parse(text));
}

// "generic", "p^d,p^e" or "p^d,-p^e".
QtMode parse_qt(const std::string& text) {
  if (text.empty() || text == "generic") return QtMode::generic();
  static const std::regex re(R"(\s*p\^(\d+)\s*,\s*(-?)\s*p\^(-?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("--qt expects generic or p^d,p^e");
  return QtMode::power(std::stoi(m[1]), std::stoi(m[3]), m[2].length() ? -1 : 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int exit_code(const std::vector<IdentityReport>& rs) {
  for (const auto& r : rs)
    if (is_failure(r.verdict)) return kExitFailure;
  return 0;
}

void emit(const std::vector<IdentityReport>& rs, std::size_t skipped, const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::json j;
    j["reports"] = nlohmann::json::array();
    for (const auto& r : rs) j["reports"].push_back(report_to_json(r));
    j["skipped"] = skipped;
    out << j.dump(2) << "\n";
  } else {
    out << reports_to_text(rs);
    if (skipped) out << skipped << " cases not run\n";
  }
}

Poly compute_family(const std::string& family, const std::string& label, int n, const std::string& alpha,
                    const std::string& qt, const std::string& a) {
  const LaguerreParam lag = a.empty() || a == "generic" ? LaguerreParam::symbolic() : LaguerreParam::at(BigRational::parse(a));
  const bool sym = family.find("-sym") != std::string::npos || family.find("-antisym") != std::string::npos;
  Partition kappa = sym ? parse_partition(label, n) : Partition();
  Composition eta = sym ? Composition() : parse_composition(label, n);
  if (family.rfind("macdonald", 0) == 0) {
    QtMode mode = parse_qt(qt);
    if (family == "macdonald-nonsym") return macdonald_nonsymmetric(eta, mode);
    if (family == "macdonald-sym") return macdonald_symmetric(kappa, mode);
    return macdonald_antisymmetric(kappa, mode);
  }
  AlphaMode mode = parse_alpha(alpha);
  if (family == "jack-nonsym") return jack_nonsymmetric(eta, mode);
  if (family == "jack-sym") return jack_symmetric(kappa, mode);
  if (family == "jack-antisym") return jack_antisymmetric(kappa, mode);
  if (family == "hermite-nonsym") return hermite_nonsymmetric(eta, mode);
  if (family == "hermite-sym") return hermite_symmetric(kappa, mode);
  if (family == "laguerre-nonsym") return laguerre_nonsymmetric(eta, mode, lag);
  return laguerre_symmetric(kappa, mode, lag);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Jack, Hermite, Laguerre and Macdonald polynomials and clustering identities"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "Compute one polynomial");
  std::string family, label, alpha, qt, lag_a, format = "pretty", cache_dir;
  int n = 0;
  compute->add_option("family", family, "Polynomial family")->required()->check(CLI::IsMember(kFamilies));
  compute->add_option("--label", label, "Label as parts \"4,2,0\" or frequencies \"[f0,f1,...]\"")->required();
  compute->add_option("--n", n, "Number of variables")->required()->check(CLI::Range(1, 16));
  compute->add_option("--alpha", alpha, "Jack parameter p/q, or generic");
  compute->add_option("--qt", qt, "Macdonald parameters: generic, p^d,p^e or p^d,-p^e");
  compute->add_option("--a", lag_a, "Laguerre parameter p/q, or generic");
  compute->add_option("--format", format, "Output format")->check(CLI::IsMember({"pretty", "canonical"}));
  compute->add_option("--cache", cache_dir, "Cache directory");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check one identity case");
  std::string id_name, kappa_text, perturb = "none", vformat = "text", vcache;
  std::map<std::string, int> params;
  std::vector<std::string> pnames = {"k", "r", "s", "m", "b", "n", "l", "g"};
  verify_cmd->add_option("identity", id_name, "Identity id, e.g. PROP1")->required();
  for (const auto& p : pnames) verify_cmd->add_option("--" + p, params[p], "Parameter " + p);
  verify_cmd->add_option("--kappa", kappa_text, "Partition label");
  verify_cmd->add_option("--perturb", perturb, "Negative control")->check(CLI::IsMember({"none", "exponent", "parameter"}));
  verify_cmd->add_option("--format", vformat, "Output format")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--cache", vcache, "Cache directory");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "Run every admissible case of a scan configuration");
  std::string config_path, out_path, sformat = "text", scache;
  int jobs = 0;
  double budget = 0;
  scan_cmd->add_option("config", config_path, "JSON scan configuration")->required()->check(CLI::ExistingFile);
  scan_cmd->add_option("--out", out_path, "Write the JSON reports to this file");
  scan_cmd->add_option("--format", sformat, "Output format")->check(CLI::IsMember({"text", "json"}));
  scan_cmd->add_option("--cache", scache, "Cache directory (overrides the configuration)");
  scan_cmd->add_option("--jobs", jobs, "Worker threads (overrides the configuration)");
  scan_cmd->add_option("--budget", budget, "Time budget in seconds (overrides the configuration)");

  // report
  auto* report_cmd = app.add_subcommand("report", "Render saved scan reports");
  std::string input_path, rformat = "text";
  report_cmd->add_option("--input", input_path, "JSON reports written by scan --out")->required()->check(CLI::ExistingFile);
  report_cmd->add_option("--format", rformat, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*compute) {
      auto run = [&] { return compute_family(family, label, n, alpha, qt, lag_a); };
      Poly f;
      if (!cache_dir.empty()) {
        ResultCache cache(cache_dir);
        f = cache.get_or_compute_poly("compute|" + family + "|" + label + "|" + std::to_string(n) + "|" + alpha + "|" + qt +
                                          "|" + lag_a,
                                      run);
      } else {
        f = run();
      }
      std::cout << (format == "canonical" ? serialize(f) : pretty(f) + "\n");
      return 0;
    }
    if (*verify_cmd) {
      IdentityCase c;
      c.id = parse_identity(id_name);
      nlohmann::json j = case_to_json(c);
      for (const auto& p : pnames)
        if (verify_cmd->count("--" + p)) j[p] = params[p];
      if (!kappa_text.empty()) j["kappa"] = kappa_text;
      j["perturb"] = perturb;
      c = case_from_json(j);
      std::unique_ptr<ResultCache> cache;
      if (!vcache.empty()) cache = std::make_unique<ResultCache>(vcache);
      IdentityReport r = verify_cached(c, cache.get());
      emit({r}, 0, vformat, std::cout);
      return exit_code({r});
    }
    if (*scan_cmd) {
      ScanConfig cfg = parse_scan_config(nlohmann::json::parse(read_file(config_path)));
      if (!scache.empty()) cfg.cache_dir = scache;
      if (jobs > 0) cfg.jobs = jobs;
      if (budget > 0) cfg.budget_seconds = budget;
      std::unique_ptr<ResultCache> cache;
      if (cfg.cache_dir) cache = std::make_unique<ResultCache>(*cfg.cache_dir);
      ScanResult res = scan(cfg, cache.get());
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        emit(res.reports, res.skipped, "json", out);
      }
      emit(res.reports, res.skipped, sformat, std::cout);
      return exit_code(res.reports);
    }
    if (*report_cmd) {
      nlohmann::json j = nlohmann::json::parse(read_file(input_path));
      const nlohmann::json& arr = j.is_array() ? j : j.at("reports");
      std::vector<IdentityReport> rs;
      for (const auto& e : arr) rs.push_back(report_from_json(e));
      const std::size_t skipped = j.is_object() ? j.value("skipped", std::size_t{0}) : 0;
      emit(rs, skipped, rformat, std::cout);
      return exit_code(rs);
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PoleError& e) {
    std::cerr << "pole: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
