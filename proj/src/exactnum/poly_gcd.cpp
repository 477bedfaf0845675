#include "jackclust/exactnum/poly_gcd.hpp"

#include <algorithm>

namespace jackclust {

namespace {

int first_variable(ParamMask m) {
  for (int v = 0; v < kParamCount; ++v)
    if (m & (1u << v)) return v;
  return -1;
}

struct HeuResult {
  ParamPoly h, cff, cfg;
};

// Recovers a polynomial in v from its image at v = xi using balanced xi-adic digits.
ParamPoly interpolate(ParamPoly h, const mpz_class& xi, int v) {
  std::vector<ParamPoly::Term> out;
  const mpz_class half = xi / 2;
  int i = 0;
  while (!h.is_zero()) {
    std::vector<ParamPoly::Term> digit;
    for (const auto& t : h.terms()) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), t.coef.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) digit.push_back({t.mono, r});
    }
    ParamPoly g = ParamPoly::from_terms(digit);
    h -= g;
    h = h.divide_integer(xi);
    uint64_t shift = pmono::make(static_cast<Param>(v), i);
    for (auto& t : digit) out.push_back({pmono::mul(t.mono, shift), t.coef});
    ++i;
  }
  ParamPoly r = ParamPoly::from_terms(std::move(out));
  if (!r.is_zero() && r.leading().coef < 0) r = -r;
  return r;
}

std::optional<HeuResult> heu(const ParamPoly& f0, const ParamPoly& g0) {
  if (f0.is_constant() && g0.is_constant()) {
    mpz_class a = f0.constant_value(), b = g0.constant_value(), h;
    mpz_gcd(h.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return HeuResult{ParamPoly(h), ParamPoly(mpz_class(a / h)), ParamPoly(mpz_class(b / h))};
  }
  mpz_class cf = f0.content(), cg = g0.content(), c;
  mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  const ParamPoly f = f0.divide_integer(c);
  const ParamPoly g = g0.divide_integer(c);
  const int v = first_variable(f.support() | g.support());

  const mpz_class fn = f.max_norm(), gn = g.max_norm();
  mpz_class xi = 2 * std::min(fn, gn) + 29;
  mpz_class alt = 2 * std::min(mpz_class(fn / abs(f.leading().coef)), mpz_class(gn / abs(g.leading().coef))) + 4;
  if (alt > xi) xi = alt;

  for (int attempt = 0; attempt < 6; ++attempt) {
    ParamPoly ff = f.evaluate(v, xi), gg = g.evaluate(v, xi);
    if (!ff.is_zero() && !gg.is_zero()) {
      auto r = heu(ff, gg);
      if (!r) return std::nullopt;
      ParamPoly h = interpolate(r->h, xi, v).primitive();
      if (!h.is_zero()) {
        auto qf = ParamPoly::divide(f, h);
        if (qf) {
          auto qg = ParamPoly::divide(g, h);
          if (qg) return HeuResult{h * ParamPoly(c), std::move(*qf), std::move(*qg)};
        }
      }
      ParamPoly cff = interpolate(r->cff, xi, v);
      if (!cff.is_zero()) {
        auto hf = ParamPoly::divide(f, cff);
        if (hf && !hf->is_zero()) {
          auto qg = ParamPoly::divide(g, *hf);
          if (qg) return HeuResult{*hf * ParamPoly(c), cff, std::move(*qg)};
        }
      }
      ParamPoly cfg = interpolate(r->cfg, xi, v);
      if (!cfg.is_zero()) {
        auto hg = ParamPoly::divide(g, cfg);
        if (hg && !hg->is_zero()) {
          auto qf = ParamPoly::divide(f, *hg);
          if (qf) return HeuResult{*hg * ParamPoly(c), std::move(*qf), cfg};
        }
      }
    }
    mpz_class s = sqrt(xi);
    s = sqrt(s);
    xi = 73794 * xi * s / 27011;
  }
  return std::nullopt;
}

void trim(std::vector<ParamPoly>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

ParamPoly coefficient_gcd(const std::vector<ParamPoly>& p) {
  ParamPoly g;
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

std::vector<ParamPoly> divide_coefficients(const std::vector<ParamPoly>& p, const ParamPoly& c) {
  std::vector<ParamPoly> out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(ParamPoly::divide_exact(x, c));
  return out;
}

// Sparse pseudo-remainder of a by b (both with nonzero leading coefficient).
std::vector<ParamPoly> pseudo_remainder(std::vector<ParamPoly> a, const std::vector<ParamPoly>& b) {
  const std::size_t db = b.size() - 1;
  const ParamPoly& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t k = a.size() - 1 - db;
    ParamPoly la = a.back();
    for (auto& x : a) x *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + k] -= la * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

ParamPoly normalize_sign(ParamPoly p) {
  if (!p.is_zero() && p.leading().coef < 0) return -p;
  return p;
}

std::optional<ParamPoly> poly_gcd_heuristic(const ParamPoly& f, const ParamPoly& g) {
  if (f.is_zero()) return normalize_sign(g);
  if (g.is_zero()) return normalize_sign(f);
  auto r = heu(f, g);
  if (!r) return std::nullopt;
  return normalize_sign(std::move(r->h));
}

ParamPoly poly_gcd_prs(const ParamPoly& f, const ParamPoly& g) {
  if (f.is_zero()) return normalize_sign(g);
  if (g.is_zero()) return normalize_sign(f);
  if (f.is_constant() || g.is_constant()) {
    mpz_class h;
    mpz_class cf = f.content(), cg = g.content();
    mpz_gcd(h.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    return ParamPoly(h);
  }
  const ParamMask sf = f.support(), sg = g.support();
  const int v = first_variable(sf | sg);
  if (!(sf & (1u << v))) return poly_gcd_prs(f, coefficient_gcd(g.to_univariate(v)));
  if (!(sg & (1u << v))) return poly_gcd_prs(coefficient_gcd(f.to_univariate(v)), g);

  auto F = f.to_univariate(v), G = g.to_univariate(v);
  ParamPoly cf = coefficient_gcd(F), cg = coefficient_gcd(G);
  ParamPoly c = poly_gcd(cf, cg);
  auto A = divide_coefficients(F, cf), B = divide_coefficients(G, cg);
  if (A.size() < B.size()) std::swap(A, B);
  while (true) {
    auto R = pseudo_remainder(A, B);
    if (R.empty()) break;
    if (R.size() == 1) {
      B = {ParamPoly(1)};
      break;
    }
    R = divide_coefficients(R, coefficient_gcd(R));
    A = std::move(B);
    B = std::move(R);
  }
  B = divide_coefficients(B, coefficient_gcd(B));
  return normalize_sign(ParamPoly::from_univariate(B, v) * c);
}

ParamPoly poly_gcd(const ParamPoly& f, const ParamPoly& g) {
  if (f.is_zero()) return normalize_sign(g);
  if (g.is_zero()) return normalize_sign(f);
  if (f.is_constant() || g.is_constant() || f.is_monomial() || g.is_monomial()) {
    mpz_class h;
    mpz_class cf = f.content(), cg = g.content();
    mpz_gcd(h.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    uint64_t m = f.leading().mono;
    for (const auto& t : f.terms()) m = pmono::gcd(m, t.mono);
    for (const auto& t : g.terms()) m = pmono::gcd(m, t.mono);
    return ParamPoly::monomial(m, h);
  }
  if (f == g || f == -g) return normalize_sign(f);
  if (auto h = heu(f, g)) return normalize_sign(std::move(h->h));
  return poly_gcd_prs(f, g);
}

}  // namespace jackclust
