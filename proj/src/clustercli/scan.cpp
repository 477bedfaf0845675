#include "jackclust/clustercli/scan.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <thread>

#include "jackclust/clustercli/report.hpp"
#include "jackclust/errors.hpp"
#include "jackclust/partlib/kappa.hpp"

namespace jackclust {

namespace {

std::vector<int> int_list(const nlohmann::json& v) {
  if (v.is_number_integer()) return {v.get<int>()};
  if (v.is_array()) return v.get<std::vector<int>>();
  if (v.is_object()) {
    const int lo = v.at("min").get<int>(), hi = v.at("max").get<int>();
    std::vector<int> out(hi >= lo ? hi - lo + 1 : 0);
    std::iota(out.begin(), out.end(), lo);
    return out;
  }
  throw ParseError("expected an integer, a list or {min,max}");
}

bool uses_staircase(IdentityId id) {
  switch (id) {
    case IdentityId::CLUSTER25_1:
    case IdentityId::NONSYM26_1:
    case IdentityId::HW_LP:
    case IdentityId::LW_LM:
    case IdentityId::B3B5:
    case IdentityId::CONJ23_8: return true;
    default: return false;
  }
}

bool uses_kappa(IdentityId id) {
  switch (id) {
    case IdentityId::PROP1:
    case IdentityId::PROP2:
    case IdentityId::PROP3_H:
    case IdentityId::PROP3_L:
    case IdentityId::EQ12_1:
    case IdentityId::PROP4:
    case IdentityId::NONSYM22_1: return true;
    default: return false;
  }
}

void partitions_up_to(int total, int max_part, int slots, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  if (slots == 0) return;
  for (int v = std::min(total, max_part); v >= 1; --v) {
    cur.push_back(v);
    partitions_up_to(total - v, v, slots - 1, cur, out);
    cur.pop_back();
  }
}

int total_vars(const IdentityCase& c) {
  if (uses_staircase(c.id)) {
    try {
      return build_kappa(*c.k, *c.r, *c.s, *c.m, *c.b).n;
    } catch (const std::exception&) {
      return -1;
    }
  }
  return c.n.value_or(-1);
}

}  // namespace

ScanConfig parse_scan_config(const nlohmann::json& j) {
  try {
    ScanConfig cfg;
    if (j.contains("budget_seconds")) cfg.budget_seconds = j.at("budget_seconds").get<double>();
    if (j.contains("jobs")) cfg.jobs = std::max(1, j.at("jobs").get<int>());
    if (j.contains("halt_on_violation")) cfg.halt_on_violation = j.at("halt_on_violation").get<bool>();
    if (j.contains("cache")) cfg.cache_dir = j.at("cache").get<std::string>();
    for (const auto& e : j.at("cases")) {
      ScanRange r;
      r.id = parse_identity(e.at("id").get<std::string>());
      auto fill = [&](const char* name, std::vector<int>& dst) {
        if (e.contains(name)) dst = int_list(e.at(name));
      };
      fill("k", r.k);
      fill("r", r.r);
      fill("s", r.s);
      fill("m", r.m);
      fill("b", r.b);
      fill("n", r.n);
      fill("l", r.l);
      fill("g", r.g);
      if (e.contains("kappa_max")) r.kappa_max = e.at("kappa_max").get<int>();
      if (e.contains("kappa"))
        for (const auto& k : e.at("kappa"))
          r.kappas.push_back(k.is_string() ? parse_partition(k.get<std::string>()) : Partition(k.get<std::vector<int>>()));
      if (e.contains("n_max")) r.n_max = e.at("n_max").get<int>();
      if (e.contains("perturb")) {
        IdentityCase probe = case_from_json({{"id", "PROP1"}, {"perturb", e.at("perturb")}});
        r.perturb = probe.perturb;
      }
      cfg.ranges.push_back(std::move(r));
    }
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad scan config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad scan config: ") + e.what());
  }
}

bool admissible(const IdentityCase& c) {
  auto has = [](const std::optional<int>& v) { return v.has_value(); };
  auto kappa_fits = [&]() {
    if (!c.kappa) return true;
    int nonzero = 0;
    for (int v : c.kappa->parts()) nonzero += v != 0;
    return nonzero <= *c.n;
  };
  const auto even_pos = [](const std::optional<int>& v) { return v && *v > 0 && *v % 2 == 0; };
  const auto odd_pos = [](const std::optional<int>& v) { return v && *v > 0 && *v % 2 == 1; };
  if (uses_staircase(c.id)) {
    if (!has(c.k) || !has(c.r) || !has(c.s) || !has(c.m) || !has(c.b)) return false;
    try {
      build_kappa(*c.k, *c.r, *c.s, *c.m, *c.b);
    } catch (const std::invalid_argument&) {
      return false;
    }
    if (c.id == IdentityId::LW_LM && (*c.s != 1 || *c.m != *c.k)) return false;
    return true;
  }
  if (!has(c.n) || *c.n < 1) return false;
  switch (c.id) {
    case IdentityId::PROP1:
    case IdentityId::EQ12_1:
    case IdentityId::PROP4: return even_pos(c.r) && kappa_fits();
    case IdentityId::PROP2:
    case IdentityId::NONSYM22_1: return odd_pos(c.l) && kappa_fits();
    case IdentityId::PROP3_H:
    case IdentityId::PROP3_L: return (c.l ? odd_pos(c.l) : even_pos(c.r)) && kappa_fits();
    case IdentityId::EQ14_1: return odd_pos(c.l);
    case IdentityId::EQ14_2: return even_pos(c.r);
    case IdentityId::RECT26:
    case IdentityId::RECT_QT:
      if (!has(c.r) || !has(c.g)) return false;
      try {
        rectangular_kappa(*c.r, *c.g, *c.n);
      } catch (const std::invalid_argument&) {
        return false;
      }
      return true;
    case IdentityId::RR_J3A: return has(c.k) && *c.k >= 1 && *c.n % *c.k == 0;
    case IdentityId::PFAFF: return *c.n % 2 == 0;
    case IdentityId::QT_RR: return has(c.k) && *c.k >= 1 && *c.n % *c.k == 0 && *c.n / *c.k >= 2;
    default: return false;
  }
}

std::vector<IdentityCase> enumerate_cases(const ScanConfig& cfg) {
  std::vector<IdentityCase> out;
  for (const auto& range : cfg.ranges) {
    auto opt = [](const std::vector<int>& v) {
      std::vector<std::optional<int>> o;
      for (int x : v) o.emplace_back(x);
      if (o.empty()) o.emplace_back(std::nullopt);
      return o;
    };
    const bool stair = uses_staircase(range.id);
    for (auto k : opt(range.k))
      for (auto r : opt(range.r))
        for (auto s : opt(range.s)) {
          std::vector<std::optional<int>> ms = opt(range.m);
          if (stair && range.m.empty() && k) {
            ms.clear();
            for (int m = 1; m <= *k; ++m) ms.emplace_back(m);
          }
          for (auto m : ms) {
            std::vector<std::optional<int>> bs = opt(range.b);
            if (stair && range.b.empty()) {
              if (!range.n_max) throw ParseError(identity_name(range.id) + ": give b or n_max");
              bs.clear();
              for (int b = 0; b <= *range.n_max; ++b) bs.emplace_back(b);
            }
            for (auto b : bs)
              for (auto n : opt(range.n))
                for (auto l : opt(range.l))
                  for (auto g : opt(range.g)) {
                    IdentityCase c;
                    c.id = range.id;
                    c.k = k, c.r = r, c.s = s, c.m = m, c.b = b, c.n = n, c.l = l, c.g = g;
                    c.perturb = range.perturb;
                    std::vector<std::optional<Partition>> labels;
                    if (uses_kappa(range.id) && n) {
                      for (const auto& p : range.kappas) labels.emplace_back(p);
                      if (range.kappa_max) {
                        std::vector<std::vector<int>> parts;
                        std::vector<int> cur;
                        partitions_up_to(*range.kappa_max, *range.kappa_max, *n, cur, parts);
                        std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
                          int sa = std::accumulate(a.begin(), a.end(), 0), sb = std::accumulate(b.begin(), b.end(), 0);
                          return sa != sb ? sa < sb : a > b;
                        });
                        for (const auto& p : parts) labels.emplace_back(Partition::padded(p, *n));
                      }
                    }
                    if (labels.empty()) labels.emplace_back(std::nullopt);
                    for (const auto& kappa : labels) {
                      c.kappa = kappa;
                      if (!admissible(c)) continue;
                      if (range.n_max && total_vars(c) > *range.n_max) continue;
                      out.push_back(c);
                    }
                  }
          }
        }
  }
  return out;
}

IdentityReport verify_cached(const IdentityCase& c, ResultCache* cache) {
  const std::string key = "report|" + c.key();
  if (cache) {
    if (auto text = cache->load(key)) {
      try {
        IdentityReport r = report_from_json(nlohmann::json::parse(*text));
        r.from_cache = true;
        return r;
      } catch (const std::exception&) {
        cache->discard(key);
      }
    }
  }
  IdentityReport r = verify(c);
  // Errors are not persisted, so a rerun retries them.
  if (cache && r.verdict != Verdict::error) cache->store(key, report_to_json(r).dump());
  return r;
}

ScanResult scan(const ScanConfig& cfg, ResultCache* cache) {
  const std::vector<IdentityCase> cases = enumerate_cases(cfg);
  std::vector<std::optional<IdentityReport>> slots(cases.size());
  const auto start = std::chrono::steady_clock::now();
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto over_budget = [&] {
    if (!cfg.budget_seconds) return false;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > *cfg.budget_seconds;
  };
  auto worker = [&] {
    while (!stop) {
      const std::size_t i = next++;
      if (i >= cases.size()) return;
      if (over_budget()) {
        stop = true;
        return;
      }
      IdentityReport r = verify_cached(cases[i], cache);
      if (cfg.halt_on_violation && is_failure(r.verdict)) stop = true;
      slots[i] = std::move(r);
    }
  };
  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  ScanResult out;
  for (auto& s : slots) {
    if (s) {
      out.reports.push_back(std::move(*s));
    } else {
      ++out.skipped;
    }
  }
  return out;
}

}  // namespace jackclust
