#include "jackclust/macdonald/macdonald.hpp"

#include <unordered_map>

#include "jackclust/errors.hpp"
#include "jackclust/jackcore/memo.hpp"
#include "jackclust/jackcore/triangular.hpp"
#include "jackclust/mpoly/special.hpp"
#include "jackclust/partlib/eigenvalues.hpp"
#include "jackclust/partlib/orders.hpp"

namespace jackclust {

namespace {

const ParamMask kQT = mask_of(Param::q) | mask_of(Param::t);

struct YSystem {
  std::vector<Composition> basis;
  std::vector<TriangularRow> rows;
};

// Dominant coefficients of M_1 m_λ: (μ, coefficient of m_μ).
using M1Column = std::vector<std::pair<Partition, ParamPoly>>;

MemoCache<YSystem>& y_systems() {
  static MemoCache<YSystem> cache;
  return cache;
}
MemoCache<M1Column>& m1_columns() {
  static MemoCache<M1Column> cache;
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

ParamPoly pq() { return ParamPoly::variable(Param::q); }
ParamPoly pt() { return ParamPoly::variable(Param::t); }

YSystem build_y_system(const Composition& eta) {
  const int n = static_cast<int>(eta.size());
  YSystem sys;
  sys.basis = compositions_below(eta);
  std::unordered_map<Composition, int, CompositionHash> index;
  for (std::size_t r = 0; r < sys.basis.size(); ++r) index.emplace(sys.basis[r], static_cast<int>(r));
  sys.rows.resize(sys.basis.size());
  for (auto& row : sys.rows) {
    row.pivots.resize(n);
    row.entries.resize(n);
  }
  for (std::size_t col = 0; col < sys.basis.size(); ++col) {
    RingPoly mono = RingPoly::monomial(n, Monomial::from_exponents(sys.basis[col]));
    for (int i = 0; i < n; ++i) {
      RingPoly img = y_scaled_apply(mono, i, pq(), pt());
      for (const auto& [m, c] : img.terms()) {
        Composition nu = m.exponents(n);
        if (nu == sys.basis[col]) {
          if (c != eigen_macdonald_nonsym_scaled(nu, i)) throw std::logic_error("Y operator diagonal mismatch");
          continue;
        }
        auto it = index.find(nu);
        if (it == index.end() || it->second <= static_cast<int>(col))
          throw std::logic_error("Y operator is not triangular in the Bruhat order");
        sys.rows[it->second].entries[i].emplace_back(static_cast<int>(col), c);
      }
    }
  }
  for (std::size_t r = 1; r < sys.basis.size(); ++r)
    for (int i = 0; i < n; ++i)
      sys.rows[r].pivots[i] = eigen_macdonald_nonsym_scaled(sys.basis[r], i) - eigen_macdonald_nonsym_scaled(eta, i);
  return sys;
}

Poly nonsymmetric_direct(const Composition& eta, const QtMode& mode) {
  auto sys = y_systems().get_or_compute(composition_to_string(eta), [&] { return build_y_system(eta); });
  auto coefs = solve_triangular(sys->rows, [&](const ParamPoly& p) { return mode.map(p); }, [&](int r) {
    return "nu=" + composition_to_string(sys->basis[r]) + " collides with eta=" + composition_to_string(eta);
  });
  const int n = static_cast<int>(eta.size());
  std::vector<Poly::Term> terms;
  for (std::size_t r = 0; r < coefs.size(); ++r)
    if (!coefs[r].is_zero()) terms.emplace_back(Monomial::from_exponents(sys->basis[r]), coefs[r]);
  Poly e = Poly::from_terms(n, std::move(terms));
  const FieldElement q = mode.q(), t = mode.t();
  for (int i = 0; i < n; ++i)
    if (y_scaled_apply(e, i, q, t) != e * mode.map(eigen_macdonald_nonsym_scaled(eta, i)))
      throw std::logic_error("Y eigen equation check failed for E" + composition_to_string(eta));
  return e;
}

M1Column build_m1_column(const Partition& lambda) {
  const int n = lambda.size();
  RingPoly m = monomial_symmetric<ParamPoly>(n, lambda.parts());
  RingPoly img = m1_hecke_apply(m, pq(), pt());
  M1Column col;
  for (const auto& [mono, c] : img.terms()) {
    Composition e = mono.exponents(n);
    if (std::is_sorted(e.begin(), e.end(), std::greater<>())) col.emplace_back(Partition(e), c);
  }
  return col;
}

MExpansion symmetric_direct(const Partition& kappa, const QtMode& mode) {
  const int n = kappa.size();
  std::vector<Partition> basis = partitions_below(kappa);
  std::unordered_map<Partition, int, PartitionHash> index;
  for (std::size_t r = 0; r < basis.size(); ++r) index.emplace(basis[r], static_cast<int>(r));
  std::vector<TriangularRow> rows(basis.size());
  for (auto& row : rows) {
    row.pivots.resize(1);
    row.entries.resize(1);
  }
  const ParamPoly top = eigen_macdonald_sym_poly(kappa);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    auto column = m1_columns().get_or_compute(basis[col].to_string(), [&] { return build_m1_column(basis[col]); });
    for (const auto& [mu, c] : *column) {
      if (mu == basis[col]) {
        if (c != eigen_macdonald_sym_poly(mu)) throw std::logic_error("M1 diagonal mismatch at " + mu.to_string());
        continue;
      }
      auto it = index.find(mu);
      if (it == index.end() || it->second <= static_cast<int>(col))
        throw std::logic_error("M1 is not triangular in the dominance order");
      rows[it->second].entries[0].emplace_back(static_cast<int>(col), c);
    }
  }
  for (std::size_t r = 1; r < basis.size(); ++r) rows[r].pivots[0] = eigen_macdonald_sym_poly(basis[r]) - top;
  auto coefs = solve_triangular(rows, [&](const ParamPoly& p) { return mode.map(p); }, [&](int r) {
    return "mu=" + basis[r].to_string() + " collides with kappa=" + kappa.to_string();
  });
  MExpansion out;
  out.n = n;
  for (std::size_t r = 0; r < coefs.size(); ++r)
    if (!coefs[r].is_zero()) out.coef.emplace(basis[r], coefs[r]);
  return out;
}

Poly specialize_qt(const Poly& f, const QtMode& mode) {
  return f.map_coefficients([&](const FieldElement& c) { return mode.specialize(c); });
}

// The nonzero constant c with f = c·g; throws unless f is a multiple of g.
FieldElement proportionality(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::invalid_argument("proportionality: zero reference");
  const FieldElement c = f.coefficient(g.leading().first) / g.leading().second;
  if (f != g * c) throw std::logic_error("polynomials are not proportional");
  return c;
}

}  // namespace

Poly macdonald_nonsymmetric(const Composition& eta, const QtMode& mode) {
  auto key = "E|" + composition_to_string(eta) + "|" + mode.key();
  return *poly_cache().get_or_compute(key, [&]() -> Poly {
    try {
      return nonsymmetric_direct(eta, mode);
    } catch (const PivotCollision&) {
      if (mode.is_generic()) throw;
    }
    Poly generic = macdonald_nonsymmetric(eta, QtMode::generic());
    try {
      return specialize_qt(generic, mode);
    } catch (const PoleError& err) {
      throw PoleError("E" + composition_to_string(eta) + " has a pole at " + mode.key() + ": " + err.what());
    }
  });
}

MExpansion macdonald_symmetric_m(const Partition& kappa, const QtMode& mode) {
  auto key = "P|" + kappa.to_string() + "|" + mode.key();
  return *m_cache().get_or_compute(key, [&]() -> MExpansion {
    try {
      return symmetric_direct(kappa, mode);
    } catch (const PivotCollision&) {
      if (mode.is_generic()) throw;
    }
    MExpansion generic = macdonald_symmetric_m(kappa, QtMode::generic());
    try {
      return map_coefficients(generic, [&](const FieldElement& c) { return mode.specialize(c); });
    } catch (const PoleError& err) {
      throw PoleError("P" + kappa.to_string() + " has a pole at " + mode.key() + ": " + err.what());
    }
  });
}

Poly macdonald_symmetric(const Partition& kappa, const QtMode& mode) {
  return m_to_poly(macdonald_symmetric_m(kappa, mode));
}

Proportional macdonald_symmetrized(const Composition& eta, const QtMode& mode) {
  Poly u = t_symmetrize(macdonald_nonsymmetric(eta, mode), mode.t(), false);
  Poly p = macdonald_symmetric(sorted_partition(eta), mode);
  return {u, proportionality(u, p)};
}

Poly macdonald_antisymmetric(const Partition& kappa, const QtMode& mode) {
  const int n = kappa.size();
  Poly p;
  if (mode.is_generic()) {
    const FieldElement q = mode.q(), t = mode.t();
    p = macdonald_symmetric(kappa, mode).map_coefficients(
        [&](const FieldElement& c) { return c.specialize({{Param::q, q}, {Param::t, q * t}}); });
  } else {
    p = macdonald_symmetric(kappa, mode.with_t_times_q());
  }
  const FieldElement t = mode.t();
  return t_vandermonde<FieldElement>(n, t) * p * t.pow(-(n * (n - 1) / 2));
}

Proportional macdonald_antisymmetrized(const Composition& rho, const QtMode& mode) {
  Partition sorted = sorted_partition(rho);
  const int n = sorted.size();
  std::vector<int> kappa(n);
  for (int j = 0; j < n; ++j) {
    kappa[j] = sorted[j] - (n - 1 - j);
    if (kappa[j] < 0 || (j > 0 && sorted[j] == sorted[j - 1]))
      throw std::invalid_argument("macdonald_antisymmetrized: parts must be distinct");
  }
  Poly u = t_symmetrize(macdonald_nonsymmetric(rho, mode), mode.t(), true);
  Poly s = macdonald_antisymmetric(Partition(kappa), mode);
  return {u, proportionality(u, s)};
}

FieldElement jack_limit(const FieldElement& x) {
  const ParamMask field = mask_of(Param::alpha);
  const FieldElement inv_alpha = FieldElement::indeterminate(Param::alpha, field).inverse();
  // q^a t^b = exp(ε(a + b/α)); returns the coefficient of ε^k/k! in the expansion of p.
  auto series = [&](const ParamPoly& p, int k) {
    FieldElement s = FieldElement(0).with_field(field);
    for (const auto& term : p.terms()) {
      const int a = pmono::exponent(term.mono, static_cast<int>(Param::q));
      const int b = pmono::exponent(term.mono, static_cast<int>(Param::t));
      if (pmono::degree(term.mono) != a + b) throw std::invalid_argument("jack_limit: parameter other than q, t");
      s += FieldElement(term.coef) * (FieldElement(a) + FieldElement(b) * inv_alpha).pow(k);
    }
    return s;
  };
  const int bound = static_cast<int>(x.den().size() + x.num().size());
  for (int k = 0; k <= bound; ++k) {
    FieldElement d = series(x.den(), k);
    if (d.is_zero()) {
      if (!series(x.num(), k).is_zero()) throw PoleError("jack_limit: pole at q=1 in " + x.pretty());
      continue;
    }
    return series(x.num(), k) / d;
  }
  throw PoleError("jack_limit: denominator vanishes identically under t=q^(1/alpha): " + x.pretty());
}

Poly jack_limit(const Poly& f) {
  return f.map_coefficients([](const FieldElement& c) { return jack_limit(c.with_field(kQT)); });
}

std::string WheelResult::describe() const {
  if (vanishes) return "all wheel substitutions vanish";
  return "z" + std::to_string(j + 1) + " = t q^" + std::to_string(s) + " z" + std::to_string(i + 1) +
         " leaves a nonzero residual";
}

WheelResult wheel_check(const Poly& f, const QtMode& mode, const WheelSpec& spec) {
  if (mode.is_generic()) throw std::invalid_argument("wheel_check needs a specialized q,t mode");
  const int n = f.nvars();
  const FieldElement q = mode.q(), t = mode.t();
  WheelResult out;
  for (int s = 0; s <= spec.s_max; ++s) {
    const FieldElement factor = t * q.pow(s);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || (spec.ordered_at_zero && s == 0 && j > i)) continue;
        std::vector<VarReplacement<FieldElement>> plan;
        for (int v = 0; v < n; ++v) plan.push_back({FieldElement(1), v});
        plan[j] = {factor, i};
        Poly g = substitute(f, plan, n);
        if (!g.is_zero()) {
          out.vanishes = false;
          out.i = i;
          out.j = j;
          out.s = s;
          out.residual = g;
          return out;
        }
      }
  }
  return out;
}

}  // namespace jackclust
