#include "jackclust/hermlag/hermlag.hpp"

#include <stdexcept>

#include "jackclust/errors.hpp"
#include "jackclust/jackcore/jack_operators.hpp"

namespace jackclust {

FieldElement LaguerreParam::value(ParamMask field) const {
  if (is_symbolic()) return FieldElement::indeterminate(Param::a, field);
  return FieldElement(*value_).with_field(field);
}

std::string LaguerreParam::key() const { return is_symbolic() ? "a" : "a=" + value_->to_string(); }

ParamMask DunklConfig::field() const { return type == DunklType::B ? alpha.field() | a.field() : alpha.field(); }

Poly lift_field(const Poly& f, ParamMask field) {
  return f.map_coefficients([field](const FieldElement& c) { return c.with_field(field); });
}

EvenPoly EvenPoly::from_x(const Poly& f) {
  std::vector<Poly::Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < f.nvars(); ++i) m.set(i, 2 * t.first[i]);
    out.emplace_back(m, t.second);
  }
  EvenPoly e;
  e.y_ = Poly::from_terms(f.nvars(), std::move(out));
  return e;
}

EvenPoly EvenPoly::from_y(const Poly& g) {
  for (const auto& t : g.terms())
    for (int i = 0; i < g.nvars(); ++i)
      if (t.first[i] % 2) throw std::invalid_argument("polynomial is not even in y" + std::to_string(i + 1));
  EvenPoly e;
  e.y_ = g;
  return e;
}

Poly EvenPoly::to_x() const {
  std::vector<Poly::Term> out;
  out.reserve(y_.size());
  for (const auto& t : y_.terms()) {
    Monomial m;
    for (int i = 0; i < y_.nvars(); ++i) m.set(i, t.first[i] / 2);
    out.emplace_back(m, t.second);
  }
  return Poly::from_terms(y_.nvars(), std::move(out));
}

namespace {

// (1 − σ_i) f / y_i: twice the part of f odd in y_i, divided by y_i.
Poly odd_part_quotient(const Poly& f, int i) {
  std::vector<Poly::Term> out;
  for (const auto& t : f.terms()) {
    if (t.first[i] % 2 == 0) continue;
    Monomial m = t.first;
    m.set(i, t.first[i] - 1);
    out.emplace_back(m, t.second * FieldElement(2));
  }
  return Poly::from_terms(f.nvars(), std::move(out));
}

}  // namespace

Poly dunkl_apply(const Poly& f, const DunklConfig& cfg, int i) {
  const int n = f.nvars();
  if (i < 0 || i >= n) throw std::out_of_range("dunkl_apply: variable index");
  const ParamMask field = cfg.field();
  const FieldElement inv_alpha = cfg.alpha.alpha().with_field(field).inverse();
  Poly g = lift_field(f, field);
  Poly coupling(n);
  for (int p = 0; p < n; ++p) {
    if (p == i) continue;
    coupling += divided_difference(g, i, p);
    // (1 − σ_iσ_p s_ip) g/(y_i + y_p) = σ_p DD_ip(σ_p g).
    if (cfg.type == DunklType::B) coupling += reflect_variable(divided_difference(reflect_variable(g, p), i, p), p);
  }
  Poly r = partial_derivative(g, i) + coupling * inv_alpha;
  if (cfg.type == DunklType::B) {
    FieldElement shift = cfg.a.value(field) + FieldElement::rational(1, 2);
    r += odd_part_quotient(g, i) * shift;
  }
  return r;
}

Poly laplacian_apply(const Poly& f, const DunklConfig& cfg) {
  if (cfg.type == DunklType::B) EvenPoly::from_y(f);
  Poly r(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) r += dunkl_apply(dunkl_apply(f, cfg, i), cfg, i);
  return r;
}

Poly exp_laplacian(const Poly& f, const DunklConfig& cfg) {
  const ParamMask field = cfg.field();
  Poly cur = lift_field(f, field);
  Poly r(f.nvars());
  const int d = f.total_degree();
  FieldElement scale(1);
  for (int m = 0; m <= d / 2; ++m) {
    if (cur.is_zero()) break;
    r += cur * scale;
    cur = laplacian_apply(cur, cfg);
    scale = scale * FieldElement::rational(-1, 4 * (m + 1));
  }
  if (!cur.is_zero()) throw std::logic_error("exp_laplacian: Laplacian did not terminate");
  return r;
}

Poly hermite_nonsymmetric(const Composition& eta, const AlphaMode& mode) {
  return exp_laplacian(jack_nonsymmetric(eta, mode), DunklConfig{DunklType::A, mode, LaguerreParam::symbolic()});
}

Poly hermite_symmetric(const Partition& kappa, const AlphaMode& mode) {
  return exp_laplacian(jack_symmetric(kappa, mode), DunklConfig{DunklType::A, mode, LaguerreParam::symbolic()});
}

namespace {

Poly laguerre_from_jack(const Poly& jack, const AlphaMode& mode, const LaguerreParam& a) {
  DunklConfig cfg{DunklType::B, mode, a};
  return EvenPoly::from_y(exp_laplacian(EvenPoly::from_x(jack).y(), cfg)).to_x();
}

}  // namespace

Poly laguerre_nonsymmetric(const Composition& eta, const AlphaMode& mode, const LaguerreParam& a) {
  return laguerre_from_jack(jack_nonsymmetric(eta, mode), mode, a);
}

Poly laguerre_symmetric(const Partition& kappa, const AlphaMode& mode, const LaguerreParam& a) {
  return laguerre_from_jack(jack_symmetric(kappa, mode), mode, a);
}

FieldElement pochhammer_ratio(const FieldElement& u, const Partition& kappa, const Partition& mu,
                              const FieldElement& alpha) {
  if (kappa.size() != mu.size()) throw std::invalid_argument("pochhammer_ratio: length mismatch");
  FieldElement r(1);
  for (int j = 0; j < kappa.size(); ++j) {
    if (mu[j] > kappa[j]) throw std::invalid_argument("pochhammer_ratio: mu not contained in kappa");
    FieldElement base = u - FieldElement(j) / alpha;
    for (int i = mu[j]; i < kappa[j]; ++i) r = r * (base + FieldElement(i));
  }
  return r;
}

Poly laguerre_binomial(const Partition& kappa, const AlphaMode& mode, const LaguerreParam& a) {
  const int n = kappa.size();
  const ParamMask field = mode.field() | a.field();
  const FieldElement alpha = mode.alpha().with_field(field);
  const FieldElement u = a.value(field) + FieldElement(1) + FieldElement(n - 1) / alpha;
  Poly r(n);
  for (const auto& [mu, c] : shifted_expansion(kappa, mode)) {
    FieldElement w = c.with_field(field) * pochhammer_ratio(u, kappa, mu, alpha);
    if ((kappa.modulus() + mu.modulus()) % 2) w = -w;
    r += lift_field(jack_symmetric(mu, mode), field) * w;
  }
  return r;
}

HwCoincidence verify_hw_coincidence(const Partition& kappa, const AlphaMode& mode) {
  HwCoincidence out;
  Poly p = jack_symmetric(kappa, mode);
  out.highest_weight = highest_weight_apply(p).is_zero();
  const ParamMask field = mode.field() | mask_of(Param::a);
  out.laguerre_equal = laguerre_symmetric(kappa, mode, LaguerreParam::symbolic()) == lift_field(p, field);
  out.hermite_equal = hermite_symmetric(kappa, mode) == lift_field(p, mode.field());
  return out;
}

}  // namespace jackclust
