#include "jackclust/jackcore/jack.hpp"

#include <unordered_map>

#include "jackclust/jackcore/jack_operators.hpp"
#include "jackclust/jackcore/memo.hpp"
#include "jackclust/jackcore/triangular.hpp"
#include "jackclust/mpoly/special.hpp"
#include "jackclust/partlib/eigenvalues.hpp"
#include "jackclust/partlib/orders.hpp"

namespace jackclust {

namespace {

constexpr std::size_t kCherednikAutoLimit = 400;

struct CherednikSystem {
  std::vector<Composition> basis;
  std::vector<TriangularRow> rows;
};

struct SutherlandSystem {
  std::vector<Partition> basis;
  std::vector<TriangularRow> rows;
};

MemoCache<CherednikSystem>& cherednik_systems() {
  static MemoCache<CherednikSystem> cache;
  return cache;
}
MemoCache<SutherlandSystem>& sutherland_systems() {
  static MemoCache<SutherlandSystem> cache;
  return cache;
}
MemoCache<Poly>& poly_cache() {
  static MemoCache<Poly> cache;
  return cache;
}
MemoCache<MExpansion>& m_cache() {
  static MemoCache<MExpansion> cache;
  return cache;
}

CherednikSystem build_cherednik_system(const Composition& eta) {
  const int n = static_cast<int>(eta.size());
  CherednikSystem sys;
  sys.basis = compositions_below(eta);
  std::unordered_map<Composition, int, CompositionHash> index;
  for (std::size_t r = 0; r < sys.basis.size(); ++r) index.emplace(sys.basis[r], static_cast<int>(r));
  sys.rows.resize(sys.basis.size());
  for (auto& row : sys.rows) {
    row.pivots.resize(n);
    row.entries.resize(n);
  }
  const ParamPoly alpha = ParamPoly::variable(Param::alpha);
  for (std::size_t col = 0; col < sys.basis.size(); ++col) {
    RingPoly mono = RingPoly::monomial(n, Monomial::from_exponents(sys.basis[col]));
    for (int i = 0; i < n; ++i) {
      RingPoly img = cherednik_apply(mono, i, alpha);
      for (const auto& [m, c] : img.terms()) {
        Composition nu = m.exponents(n);
        if (nu == sys.basis[col]) {
          if (c != eigen_jack_nonsym_poly(nu, i)) throw std::logic_error("Cherednik operator diagonal mismatch");
          continue;
        }
        auto it = index.find(nu);
        if (it == index.end() || it->second <= static_cast<int>(col))
          throw std::logic_error("Cherednik operator is not triangular in the Bruhat order");
        sys.rows[it->second].entries[i].emplace_back(static_cast<int>(col), c);
      }
    }
  }
  for (std::size_t r = 1; r < sys.basis.size(); ++r)
    for (int i = 0; i < n; ++i)
      sys.rows[r].pivots[i] = eigen_jack_nonsym_poly(sys.basis[r], i) - eigen_jack_nonsym_poly(eta, i);
  return sys;
}

SutherlandSystem build_sutherland_system(const Partition& kappa) {
  const int n = kappa.size();
  SutherlandSystem sys;
  sys.basis = partitions_below(kappa);
  std::unordered_map<Partition, int, PartitionHash> index;
  for (std::size_t r = 0; r < sys.basis.size(); ++r) index.emplace(sys.basis[r], static_cast<int>(r));
  sys.rows.resize(sys.basis.size());
  const ParamPoly top = sutherland_eigenvalue(kappa);
  std::vector<int> nu(n);
  for (std::size_t r = 1; r < sys.basis.size(); ++r) {
    const auto& lambda = sys.basis[r].parts();
    std::map<int, long> acc;
    // The pair (j,k) of m_ν with exponents {a, b}, a > b, feeds 2(a−b) into every
    // exponent pair strictly between them with the same sum.
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const int sum = lambda[j] + lambda[k];
        for (int a = lambda[j] + 1; a <= sum; ++a) {
          const int b = sum - a;
          nu = lambda;
          nu[j] = a;
          nu[k] = b;
          std::sort(nu.begin(), nu.end(), std::greater<>());
          auto it = index.find(Partition(nu));
          if (it == index.end()) continue;
          if (it->second >= static_cast<int>(r)) throw std::logic_error("Sutherland operator is not triangular");
          acc[it->second] += 2L * (a - b);
        }
      }
    TriangularRow row;
    row.pivots.push_back(sutherland_eigenvalue(sys.basis[r]) - top);
    row.entries.emplace_back();
    for (const auto& [col, v] : acc) row.entries[0].emplace_back(col, ParamPoly(v));
    sys.rows[r] = std::move(row);
  }
  return sys;
}

std::string mode_suffix(const AlphaMode& mode) { return "|" + mode.key(); }

Poly solve_nonsymmetric_direct(const Composition& eta, const AlphaMode& mode) {
  auto sys = cherednik_systems().get_or_compute(composition_to_string(eta), [&] { return build_cherednik_system(eta); });
  auto coefs = solve_triangular(sys->rows, [&](const ParamPoly& p) { return mode.map(p); }, [&](int r) {
    return "nu=" + composition_to_string(sys->basis[r]) + " collides with eta=" + composition_to_string(eta);
  });
  const int n = static_cast<int>(eta.size());
  std::vector<Poly::Term> terms;
  for (std::size_t r = 0; r < coefs.size(); ++r)
    if (!coefs[r].is_zero()) terms.emplace_back(Monomial::from_exponents(sys->basis[r]), coefs[r]);
  Poly e = Poly::from_terms(n, std::move(terms));
  const FieldElement alpha = mode.alpha();
  for (int i = 0; i < n; ++i) {
    if (cherednik_apply(e, i, alpha) != e * mode.map(eigen_jack_nonsym_poly(eta, i)))
      throw std::logic_error("eigen equation check failed for E" + composition_to_string(eta));
  }
  return e;
}

MExpansion symmetric_from_nonsymmetric(const Poly& e, const Partition& kappa) {
  MExpansion out;
  out.n = kappa.size();
  std::map<Partition, FieldElement, std::greater<>> acc;
  for (const auto& [m, c] : e.terms()) {
    Partition mu = sorted_partition(m.exponents(out.n));
    FieldElement stab(1);
    for (int f : mu.frequencies())
      for (int x = 2; x <= f; ++x) stab *= FieldElement(x);
    auto it = acc.find(mu);
    if (it == acc.end()) {
      acc.emplace(mu, c * stab);
    } else {
      it->second += c * stab;
    }
  }
  auto lead = acc.find(kappa);
  if (lead == acc.end() || lead->second.is_zero()) throw PoleError("Sym E has no m_kappa term for " + kappa.to_string());
  const FieldElement scale = lead->second.inverse();
  for (auto& [mu, c] : acc)
    if (!c.is_zero()) out.coef.emplace(mu, c * scale);
  return out;
}

MExpansion sutherland_direct(const Partition& kappa, const AlphaMode& mode) {
  auto sys = sutherland_systems().get_or_compute(kappa.to_string(), [&] { return build_sutherland_system(kappa); });
  auto coefs = solve_triangular(sys->rows, [&](const ParamPoly& p) { return mode.map(p); }, [&](int r) {
    return "mu=" + sys->basis[r].to_string() + " collides with kappa=" + kappa.to_string();
  });
  MExpansion out;
  out.n = kappa.size();
  for (std::size_t r = 0; r < coefs.size(); ++r)
    if (!coefs[r].is_zero()) out.coef.emplace(sys->basis[r], coefs[r]);
  return out;
}

MExpansion symmetric_direct(const Partition& kappa, const AlphaMode& mode, JackMethod method) {
  if (method == JackMethod::sutherland) return sutherland_direct(kappa, mode);
  return symmetric_from_nonsymmetric(jack_nonsymmetric(increasing_arrangement(kappa), mode), kappa);
}

}  // namespace

Poly jack_nonsymmetric(const Composition& eta, const AlphaMode& mode) {
  auto key = "E|" + composition_to_string(eta) + mode_suffix(mode);
  return *poly_cache().get_or_compute(key, [&]() -> Poly {
    try {
      return solve_nonsymmetric_direct(eta, mode);
    } catch (const PivotCollision&) {
      if (mode.is_generic()) throw;
    }
    Poly generic = jack_nonsymmetric(eta, AlphaMode::generic());
    try {
      return specialize_poly(generic, {{Param::alpha, mode.alpha()}});
    } catch (const PoleError& err) {
      throw PoleError("E" + composition_to_string(eta) + " has a pole: " + err.what());
    }
  });
}

MExpansion jack_symmetric_m(const Partition& kappa, const AlphaMode& mode, JackMethod method) {
  if (method == JackMethod::automatic)
    method = cherednik_basis_size(kappa) <= kCherednikAutoLimit ? JackMethod::cherednik : JackMethod::sutherland;
  auto key = std::string(method == JackMethod::cherednik ? "Pc|" : "Ps|") + kappa.to_string() + mode_suffix(mode);
  return *m_cache().get_or_compute(key, [&]() -> MExpansion {
    try {
      return symmetric_direct(kappa, mode, method);
    } catch (const PoleError&) {
      if (mode.is_generic()) throw;
    }
    MExpansion generic = jack_symmetric_m(kappa, AlphaMode::generic(), method);
    try {
      return map_coefficients(generic, [&](const FieldElement& c) { return mode.specialize(c); });
    } catch (const PoleError& err) {
      throw PoleError("P" + kappa.to_string() + " has a pole: " + err.what());
    }
  });
}

Poly jack_symmetric(const Partition& kappa, const AlphaMode& mode, JackMethod method) {
  return m_to_poly(jack_symmetric_m(kappa, mode, method));
}

Poly jack_antisymmetric(const Partition& kappa, const AlphaMode& mode) {
  const int n = kappa.size();
  Poly p;
  if (mode.is_generic()) {
    FieldElement a = mode.alpha();
    p = specialize_poly(jack_symmetric(kappa, mode), {{Param::alpha, a / (a + 1)}});
  } else {
    BigRational v = mode.value();
    if (v == BigRational(-1)) throw PoleError("antisymmetric Jack polynomial needs alpha != -1");
    p = jack_symmetric(kappa, AlphaMode::at(v / (v + BigRational(1))));
  }
  return vandermonde<FieldElement>(n) * p;
}

Poly jack_antisymmetric_via_nonsymmetric(const Partition& kappa, const AlphaMode& mode) {
  Partition top = kappa + Partition::delta(kappa.size());
  Poly a = antisymmetrize(jack_nonsymmetric(increasing_arrangement(top), mode));
  FieldElement lead = a.coefficient(Monomial::from_exponents(top.parts()));
  if (lead.is_zero()) throw PoleError("Asym E vanishes on the leading monomial for " + kappa.to_string());
  return a * lead.inverse();
}

JackResult jack_compute(JackFamily family, const Composition& label, const AlphaMode& mode) {
  switch (family) {
    case JackFamily::nonsymmetric:
      return {family, label, jack_nonsymmetric(label, mode), mode};
    case JackFamily::symmetric:
      return {family, label, jack_symmetric(Partition(label), mode), mode};
    case JackFamily::antisymmetric:
      return {family, label, jack_antisymmetric(Partition(label), mode), mode};
  }
  throw std::logic_error("unknown Jack family");
}

std::map<Partition, FieldElement, std::greater<>> jack_basis_expand(const Poly& f, const AlphaMode& mode) {
  MExpansion rest = poly_to_m(f);
  std::map<Partition, FieldElement, std::greater<>> out;
  while (!rest.coef.empty()) {
    auto [mu, c] = *rest.coef.begin();
    out.emplace(mu, c);
    for (const auto& [nu, x] : jack_symmetric_m(mu, mode).coef) {
      auto it = rest.coef.find(nu);
      FieldElement v = (it == rest.coef.end() ? FieldElement(0) : it->second) - c * x;
      if (v.is_zero()) {
        if (it != rest.coef.end()) rest.coef.erase(it);
      } else if (it == rest.coef.end()) {
        rest.coef.emplace(nu, v);
      } else {
        it->second = v;
      }
    }
  }
  return out;
}

std::map<Partition, FieldElement, std::greater<>> shifted_expansion(const Partition& kappa, const AlphaMode& mode) {
  const int n = kappa.size();
  Poly p = jack_symmetric(kappa, mode);
  return jack_basis_expand(translate(p, std::vector<FieldElement>(n, FieldElement(1))), mode);
}

BinomialValue binomial_coefficient(const Partition& kappa, const Partition& mu, const AlphaMode& mode) {
  if (mu.size() != kappa.size()) throw std::invalid_argument("binomial_coefficient: length mismatch");
  for (int i = 0; i < kappa.size(); ++i)
    if (mu[i] > kappa[i]) throw std::invalid_argument("binomial_coefficient: mu is not contained in kappa");
  auto exp = shifted_expansion(kappa, mode);
  auto it = exp.find(mu);
  FieldElement coef = it == exp.end() ? FieldElement(0) : it->second;
  FieldElement top = evaluate_at_ones(jack_symmetric_m(kappa, mode));
  if (top.is_zero()) return {coef, true};
  return {coef * evaluate_at_ones(jack_symmetric_m(mu, mode)) / top, false};
}

long n_phi(const Partition& kappa) {
  const long twice = 2L * kappa.modulus();
  if (kappa.size() == 0 || twice % kappa.size()) throw std::invalid_argument("N_phi = 2|kappa|/N is not an integer");
  return twice / kappa.size();
}

std::size_t cherednik_basis_size(const Partition& kappa) {
  std::size_t total = 1;
  for (const auto& mu : partitions_below(kappa)) {
    if (mu == kappa) continue;
    total += orbit_size(mu).get_ui();
    if (total > (1u << 24)) break;
  }
  return total;
}

}  // namespace jackclust
