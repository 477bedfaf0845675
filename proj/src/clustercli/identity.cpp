#include "jackclust/clustercli/identity.hpp"

#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "jackclust/clustercli/coalesce.hpp"
#include "jackclust/errors.hpp"
#include "jackclust/hermlag/hermlag.hpp"
#include "jackclust/jackcore/jack.hpp"
#include "jackclust/macdonald/macdonald.hpp"
#include "jackclust/mpoly/special.hpp"
#include "jackclust/partlib/kappa.hpp"

namespace jackclust {

namespace {

struct Entry {
  IdentityId id;
  const char* name;
  const char* statement;
};

const std::vector<Entry>& table() {
  static const std::vector<Entry> t = {
      {IdentityId::PROP1, "PROP1", "P_{kappa+r*delta}(z;-2/(r-1)) = Delta(z)^r * P_kappa(z;2/(r+1)), r even"},
      {IdentityId::PROP2, "PROP2", "E_{kappa+l*delta}(z;-2/l) = Delta(z)^l * E_kappa(z;2/l), l odd"},
      {IdentityId::PROP3_H, "PROP3_H",
       "E^H_{kappa+l*delta}(z;-2/l) = Delta^l E^H_kappa(z;2/l), l odd; "
       "P^H_{kappa+r*delta}(z;-2/(r-1)) = Delta^r P^H_kappa(z;2/(r+1)), r even"},
      {IdentityId::PROP3_L, "PROP3_L",
       "E^L_{kappa+l*delta}(z;-2/l) = Delta^l E^L_kappa(z;2/l), l odd; "
       "P^L_{kappa+r*delta}(z;-2/(r-1)) = Delta^r P^L_kappa(z;2/(r+1)), r even; a symbolic"},
      {IdentityId::EQ14_1, "EQ14_1", "E_{l*delta}(z;-2/l) = E^H_{l*delta}(z;-2/l) = E^L_{l*delta}(z;-2/l) = Delta(z)^l"},
      {IdentityId::EQ14_2, "EQ14_2",
       "P_{r*delta}(z;-2/(r-1)) = P^H_{r*delta}(z;-2/(r-1)) = P^L_{r*delta}(z;-2/(r-1)) = Delta(z)^r"},
      {IdentityId::EQ12_1, "EQ12_1",
       "Sym E_{r*delta+kappa}(z;-2/(r-1)) = c * Delta(z)^{r-1} * Asym E_{kappa+delta}(z;2/(r-1)), r even"},
      {IdentityId::PROP4, "PROP4",
       "P_{kappa+r*delta}(z;q,q^{-(r-1)/2}) = (-q^{-1/2})^{r^2 N(N-1)/8} D_{r/2}(z;q^{1/2}) P_kappa(z;q,q^{(r+1)/2})"},
      {IdentityId::CLUSTER25_1, "CLUSTER25_1",
       "P_kappa(z_1..z_{N-n0}, z..z; alpha) = prod_j (z_j - z)^{(r-1)s+1} P_{kappa~}(z_1..z_{N-n0}; alpha), "
       "kappa = kappa(k,r,s,m), alpha = -(k+1)/(r-1)"},
      {IdentityId::RECT26, "RECT26",
       "P_{r^g}(z_1..z_g, 1..1; -(N+1-g)/(r-1)) = prod_{l<=g} (z_l - 1)^r"},
      {IdentityId::NONSYM26_1, "NONSYM26_1",
       "E_kappa(z_1..z_{N-n0}, z..z; alpha) = prod_j (z_j - z)^{(r-1)s} f(z_1..z_{N-n0}, z), kappa = kappa(k,r,s,m)"},
      {IdentityId::NONSYM22_1, "NONSYM22_1",
       "E_{kappa+l*delta}(z;q,q^{-l/2}) = D_{(l-1)/2}(z;q^{1/2}) prod_{i<j} (z_i - q^{l/2} z_j) f(z), l odd"},
      {IdentityId::RR_J3A, "RR_J3A",
       "Sym prod_{groups} prod_{i<j in group} (z_i - z_j)^2 = c * P_{(2 delta)^k}(z;-(k+1))"},
      {IdentityId::PFAFF, "PFAFF", "Pf[1/(z_i - z_j)] * Delta(z) = c * P_{(2 delta)^2}(z;-3)"},
      {IdentityId::HW_LP, "HW_LP", "sum_j d/dz_j P_kappa(z;alpha) = 0, kappa = kappa(k,r,s,m), alpha = -(k+1)/(r-1)"},
      {IdentityId::LW_LM, "LW_LM",
       "(sum_j z_j^2 d/dz_j - N_phi sum_j z_j) P_kappa(z;alpha) = 0, N_phi = 2|kappa|/N, kappa = kappa(k,r,1,k)"},
      {IdentityId::B3B5, "B3B5",
       "P^L_kappa(z;alpha) = P^H_kappa(z;alpha) = P_kappa(z;alpha) for kappa = kappa(k,r,s,m), a symbolic"},
      {IdentityId::CONJ23_8, "CONJ23_8",
       "P_kappa(z, t z, .., t^{n0-1} z, z_{n0+1}..z_N; q, t) = prod_{j=-(r-1)(s-1)}^{r-1} prod_{i>n0} "
       "(z_i - t^k q^j z) P_{kappa~}(z_{n0+1}..z_N; q, t), t = q^{-(r-1)/(k+1)}"},
      {IdentityId::RECT_QT, "RECT_QT",
       "P_{r^g}(z, t z, .., t^{N-g-1} z, z_{N-g+1}..z_N; q, t) = prod_{l>N-g} prod_{j=0}^{r-1} (z_l - t^{N-g} q^j z), "
       "t = q^{-(r-1)/(N+1-g)}"},
      {IdentityId::QT_RR, "QT_RR",
       "U+ prod_{groups} prod_{i<j in group} (z_i - t z_j)(t z_i - z_j) = c * P_{kappa(k,2,1,k)}(z;q,t), t = q^{-1/(k+1)}"},
  };
  return t;
}

class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int need(const std::optional<int>& v, const char* name) {
  if (!v) throw NotApplicable(std::string("missing parameter ") + name);
  return *v;
}

Partition need_kappa(const IdentityCase& c, int n) {
  std::vector<int> parts = c.kappa ? c.kappa->parts() : std::vector<int>{};
  int nonzero = 0;
  for (int v : parts) nonzero += v != 0;
  if (nonzero > n) throw NotApplicable("kappa has more nonzero parts than N");
  return Partition::padded(parts, n);
}

BigRational rat(long a, long b) { return BigRational(a, b); }

Poly delta_power(int n, int e) { return vandermonde<FieldElement>(n).pow(static_cast<unsigned>(e)); }

FieldElement p_power(int e) {
  FieldElement p = FieldElement::indeterminate(Param::p, mask_of(Param::p));
  return e >= 0 ? p.pow(e) : p.inverse().pow(-e);
}

// Raised exponent under an exponent perturbation.
int bump(const IdentityCase& c) { return c.perturb == Perturbation::exponent ? 1 : 0; }
// Shift applied to the claimed α under a parameter perturbation.
BigRational alpha_shift(const IdentityCase& c) {
  return c.perturb == Perturbation::parameter ? BigRational(1, 7) : BigRational(0);
}

void record_equal(IdentityReport& rep, const Poly& lhs, const Poly& rhs, const std::string& tag = "residual") {
  Poly d = lhs - rhs;
  if (d.is_zero()) return;
  rep.verdict = Verdict::fails;
  rep.polys[tag] = d;
}

// lhs = c·rhs with c ≠ 0, c from the leading coefficients.
void record_proportional(IdentityReport& rep, const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) {
    rep.verdict = Verdict::fails;
    rep.polys["residual"] = lhs.is_zero() ? rhs : lhs;
    rep.note = lhs.is_zero() ? "left side vanishes" : "right side vanishes";
    return;
  }
  FieldElement ratio = lhs.leading().second / rhs.leading().second;
  Poly d = lhs - rhs * ratio;
  rep.constants["ratio"] = ratio;
  if (!d.is_zero()) {
    rep.verdict = Verdict::fails;
    rep.polys["residual"] = d;
  }
}

Poly z(int n, int i) { return Poly::variable(n, i); }

// --- Jack family propositions ---

void prop1(const IdentityCase& c, IdentityReport& rep) {
  const int r = need(c.r, "r"), n = need(c.n, "n");
  if (r <= 0 || r % 2) throw NotApplicable("r must be even and positive");
  Partition kappa = need_kappa(c, n);
  Poly lhs = jack_symmetric(kappa + Partition::delta(n).scaled(r), AlphaMode::at(rat(-2, r - 1) + alpha_shift(c)));
  Poly rhs = delta_power(n, r + bump(c)) * jack_symmetric(kappa, AlphaMode::at(rat(2, r + 1)));
  record_equal(rep, lhs, rhs);
}

Composition plus_delta(const Partition& kappa, int l) {
  Composition eta = kappa.parts();
  const int n = kappa.size();
  for (int i = 0; i < n; ++i) eta[i] += l * (n - 1 - i);
  return eta;
}

void prop2(const IdentityCase& c, IdentityReport& rep) {
  const int l = need(c.l, "l"), n = need(c.n, "n");
  if (l <= 0 || l % 2 == 0) throw NotApplicable("l must be odd and positive");
  Partition kappa = need_kappa(c, n);
  Poly lhs = jack_nonsymmetric(plus_delta(kappa, l), AlphaMode::at(rat(-2, l) + alpha_shift(c)));
  Poly rhs = delta_power(n, l + bump(c)) * jack_nonsymmetric(kappa.parts(), AlphaMode::at(rat(2, l)));
  record_equal(rep, lhs, rhs);
}

void prop3(const IdentityCase& c, IdentityReport& rep, bool laguerre) {
  const int n = need(c.n, "n");
  Partition kappa = need_kappa(c, n);
  const LaguerreParam a = LaguerreParam::symbolic();
  const ParamMask field = laguerre ? mask_of(Param::a) : 0;
  Poly lhs, rhs;
  if (c.l) {
    const int l = *c.l;
    if (l <= 0 || l % 2 == 0) throw NotApplicable("l must be odd and positive");
    AlphaMode left = AlphaMode::at(rat(-2, l) + alpha_shift(c)), right = AlphaMode::at(rat(2, l));
    Composition eta = plus_delta(kappa, l);
    lhs = laguerre ? laguerre_nonsymmetric(eta, left, a) : hermite_nonsymmetric(eta, left);
    rhs = laguerre ? laguerre_nonsymmetric(kappa.parts(), right, a) : hermite_nonsymmetric(kappa.parts(), right);
    rhs = lift_field(delta_power(n, l + bump(c)), field) * rhs;
  } else {
    const int r = need(c.r, "l or r");
    if (r <= 0 || r % 2) throw NotApplicable("r must be even and positive");
    AlphaMode left = AlphaMode::at(rat(-2, r - 1) + alpha_shift(c)), right = AlphaMode::at(rat(2, r + 1));
    Partition big = kappa + Partition::delta(n).scaled(r);
    lhs = laguerre ? laguerre_symmetric(big, left, a) : hermite_symmetric(big, left);
    rhs = laguerre ? laguerre_symmetric(kappa, right, a) : hermite_symmetric(kappa, right);
    rhs = lift_field(delta_power(n, r + bump(c)), field) * rhs;
  }
  record_equal(rep, lhs, rhs);
}

void eq14(const IdentityCase& c, IdentityReport& rep, bool symmetric) {
  const int n = need(c.n, "n");
  const int e = symmetric ? need(c.r, "r") : need(c.l, "l");
  if (e <= 0 || (symmetric ? e % 2 : (e + 1) % 2)) throw NotApplicable(symmetric ? "r must be even" : "l must be odd");
  AlphaMode mode = AlphaMode::at((symmetric ? rat(-2, e - 1) : rat(-2, e)) + alpha_shift(c));
  Poly target = delta_power(n, e + bump(c));
  const LaguerreParam a = LaguerreParam::symbolic();
  Partition top = Partition::delta(n).scaled(e);
  if (symmetric) {
    record_equal(rep, jack_symmetric(top, mode), target, "residual_jack");
    record_equal(rep, hermite_symmetric(top, mode), target, "residual_hermite");
    record_equal(rep, laguerre_symmetric(top, mode, a), lift_field(target, mask_of(Param::a)), "residual_laguerre");
  } else {
    record_equal(rep, jack_nonsymmetric(top.parts(), mode), target, "residual_jack");
    record_equal(rep, hermite_nonsymmetric(top.parts(), mode), target, "residual_hermite");
    record_equal(rep, laguerre_nonsymmetric(top.parts(), mode, a), lift_field(target, mask_of(Param::a)),
                 "residual_laguerre");
  }
}

void eq12_1(const IdentityCase& c, IdentityReport& rep) {
  const int r = need(c.r, "r"), n = need(c.n, "n");
  if (r <= 0 || r % 2) throw NotApplicable("r must be even and positive");
  if (n > 6) throw NotApplicable("explicit symmetrization limited to N <= 6");
  Partition kappa = need_kappa(c, n);
  Poly lhs = symmetrize(jack_nonsymmetric(plus_delta(kappa, r), AlphaMode::at(rat(-2, r - 1) + alpha_shift(c))));
  Poly rhs = delta_power(n, r - 1 + bump(c)) *
             antisymmetrize(jack_nonsymmetric(plus_delta(kappa, 1), AlphaMode::at(rat(2, r - 1))));
  record_proportional(rep, lhs, rhs);
}

// --- clustering ---

KappaSpec staircase(const IdentityCase& c) {
  try {
    return build_kappa(need(c.k, "k"), need(c.r, "r"), need(c.s, "s"), need(c.m, "m"), need(c.b, "b"));
  } catch (const std::invalid_argument& e) {
    throw NotApplicable(e.what());
  }
}

AlphaMode shifted(const BigRational& alpha, const IdentityCase& c) { return AlphaMode::at(alpha + alpha_shift(c)); }

void record_coalesced(IdentityReport& rep, const CoalesceComparison& cmp, Verdict bad) {
  rep.note = std::to_string(cmp.compared) + " coefficients compared";
  if (!cmp.equal) {
    rep.verdict = bad;
    rep.polys["residual"] = cmp.residual;
  }
}

MExpansion constant_one(int n) {
  MExpansion one;
  one.n = n;
  one.coef.emplace(Partition::zero(n), FieldElement(1));
  return one;
}

void cluster25_1(const IdentityCase& c, IdentityReport& rep) {
  KappaSpec spec = staircase(c);
  const int r = *c.r, s = *c.s;
  MExpansion f = jack_symmetric_m(spec.kappa, shifted(spec.alpha, c));
  MExpansion q = jack_symmetric_m(reduced_kappa(spec.kappa), AlphaMode::at(spec.alpha));
  std::vector<FieldElement> mult(spec.n0, FieldElement(1));
  std::vector<FieldElement> roots((r - 1) * s + 1 + bump(c), FieldElement(1));
  record_coalesced(rep, compare_coalesced(f, mult, roots, q, false), Verdict::fails);
}

void rect26(const IdentityCase& c, IdentityReport& rep) {
  const int r = need(c.r, "r"), g = need(c.g, "g"), n = need(c.n, "n");
  KappaSpec spec;
  try {
    spec = rectangular_kappa(r, g, n);
  } catch (const std::invalid_argument& e) {
    throw NotApplicable(e.what());
  }
  MExpansion f = jack_symmetric_m(spec.kappa, shifted(spec.alpha, c));
  std::vector<FieldElement> mult(n - g, FieldElement(1));
  std::vector<FieldElement> roots(r + bump(c), FieldElement(1));
  record_coalesced(rep, compare_coalesced(f, mult, roots, constant_one(g), true), Verdict::fails);
}

// Keeps the first `keep` variables and sends the rest to one new variable.
std::vector<VarReplacement<FieldElement>> coalesce_tail_plan(int n, int keep) {
  std::vector<VarReplacement<FieldElement>> plan;
  for (int i = 0; i < n; ++i) plan.push_back({FieldElement(1), i < keep ? i : keep});
  return plan;
}

void record_divisible(IdentityReport& rep, const Poly& f, const Poly& factor) {
  auto d = exact_divide(f, factor);
  if (d.exact()) {
    rep.polys["f"] = *d.quotient;
  } else {
    rep.verdict = Verdict::fails;
    rep.polys["residual"] = d.remainder.is_zero() ? f : d.remainder;
  }
}

void nonsym26_1(const IdentityCase& c, IdentityReport& rep) {
  KappaSpec spec = staircase(c);
  const int r = *c.r, s = *c.s;
  const int keep = spec.n - spec.n0;
  Poly e = jack_nonsymmetric(spec.kappa.parts(), shifted(spec.alpha, c));
  Poly g = substitute(e, coalesce_tail_plan(spec.n, keep), keep + 1);
  Poly factor = Poly::constant(keep + 1, FieldElement(1));
  for (int j = 0; j < keep; ++j) factor = factor * (z(keep + 1, j) - z(keep + 1, keep));
  record_divisible(rep, g, factor.pow(static_cast<unsigned>((r - 1) * s + bump(c))));
}

void nonsym22_1(const IdentityCase& c, IdentityReport& rep) {
  const int l = need(c.l, "l"), n = need(c.n, "n");
  if (l <= 0 || l % 2 == 0) throw NotApplicable("l must be odd and positive");
  Partition kappa = need_kappa(c, n);
  QtMode mode = c.perturb == Perturbation::parameter ? QtMode::power(2, -l, -1) : QtMode::power(2, -l);
  Poly e = macdonald_nonsymmetric(plus_delta(kappa, l), mode);
  Poly factor = dl_product<FieldElement>(n, (l - 1) / 2, p_power(1));
  Poly tail = Poly::constant(n, FieldElement(1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) tail = tail * (z(n, i) - Poly::variable(n, j, p_power(l)));
  record_divisible(rep, e, factor * tail.pow(static_cast<unsigned>(1 + bump(c))));
}

// --- Read–Rezayi and Pfaffian ---

// (2δ_g)^k: each part of 2δ_g repeated k times.
Partition repeated_staircase(int g, int k) {
  std::vector<int> parts;
  for (int i = g - 1; i >= 0; --i)
    for (int x = 0; x < k; ++x) parts.push_back(2 * i);
  return Partition(parts);
}

void rr_j3a(const IdentityCase& c, IdentityReport& rep) {
  const int k = need(c.k, "k"), n = need(c.n, "n");
  if (k < 1 || n % k) throw NotApplicable("N must be a multiple of k");
  if (n > 7) throw NotApplicable("explicit symmetrization limited to N <= 7");
  const int g = n / k;
  Poly prod = Poly::constant(n, FieldElement(1));
  for (int grp = 0; grp < k; ++grp)
    for (int i = 0; i < g; ++i)
      for (int j = i + 1; j < g; ++j) prod = prod * (z(n, grp * g + i) - z(n, grp * g + j)).pow(2 + bump(c));
  Poly lhs = symmetrize(prod);
  Poly rhs = jack_symmetric(repeated_staircase(g, k), shifted(BigRational(-(k + 1)), c));
  record_proportional(rep, lhs, rhs);
}

void pfaff(const IdentityCase& c, IdentityReport& rep) {
  const int n = need(c.n, "n");
  if (n < 2 || n % 2) throw NotApplicable("N must be even and positive");
  Poly lhs = pfaffian_product<FieldElement>(n) * delta_power(n, bump(c));
  Poly rhs = jack_symmetric(repeated_staircase(n / 2, 2), shifted(BigRational(-3), c));
  record_proportional(rep, lhs, rhs);
}

// --- weight conditions and coincidences ---

// Exponent perturbation for label-based checks: the largest part is raised by one.
Partition bumped(const Partition& kappa, const IdentityCase& c) {
  std::vector<int> parts = kappa.parts();
  parts[0] += bump(c);
  return Partition(parts);
}

Poly m_residual(const MExpansion& f) {
  // Coefficients on m_λ, stored on the dominant monomials z^λ.
  std::vector<Poly::Term> terms;
  for (const auto& [lambda, v] : f.coef) terms.emplace_back(Monomial::from_exponents(lambda.parts()), v);
  return Poly::from_terms(f.n, std::move(terms));
}

void hw_lp(const IdentityCase& c, IdentityReport& rep) {
  KappaSpec spec = staircase(c);
  MExpansion out = highest_weight_m(jack_symmetric_m(bumped(spec.kappa, c), shifted(spec.alpha, c)));
  if (!out.coef.empty()) {
    rep.verdict = Verdict::fails;
    rep.polys["residual_m"] = m_residual(out);
  }
}

void lw_lm(const IdentityCase& c, IdentityReport& rep) {
  KappaSpec spec = staircase(c);
  if (*c.s != 1 || *c.m != *c.k) throw NotApplicable("the lowest weight condition needs s = 1 and m = k");
  FieldElement nphi = FieldElement(2 * spec.kappa.modulus()) / FieldElement(spec.n) + FieldElement(bump(c));
  rep.constants["n_phi"] = nphi;
  MExpansion out = lowest_weight_m(jack_symmetric_m(spec.kappa, shifted(spec.alpha, c)), nphi);
  if (!out.coef.empty()) {
    rep.verdict = Verdict::fails;
    rep.polys["residual_m"] = m_residual(out);
  }
}

void b3b5(const IdentityCase& c, IdentityReport& rep) {
  KappaSpec spec = staircase(c);
  Partition kappa = bumped(spec.kappa, c);
  AlphaMode mode = shifted(spec.alpha, c);
  Poly p = jack_symmetric(kappa, mode);
  record_equal(rep, hermite_symmetric(kappa, mode), p, "residual_hermite");
  record_equal(rep, laguerre_symmetric(kappa, mode, LaguerreParam::symbolic()), lift_field(p, mask_of(Param::a)),
               "residual_laguerre");
}

// --- (q,t) conjectures ---

void conj23_8(const IdentityCase& c, IdentityReport& rep) {
  KappaSpec spec = staircase(c);
  const int k = *c.k, r = *c.r, s = *c.s;
  QtMode mode = QtMode::power(k + 1, -(r - 1));
  QtMode lhs_mode = c.perturb == Perturbation::parameter ? QtMode::power(k + 1, -(r - 1), -1) : mode;
  MExpansion f = macdonald_symmetric_m(spec.kappa, lhs_mode);
  MExpansion q = macdonald_symmetric_m(reduced_kappa(spec.kappa), mode);
  std::vector<FieldElement> mult;
  for (int i = 0; i < spec.n0; ++i) mult.push_back(p_power(-(r - 1) * i));
  std::vector<FieldElement> roots;
  for (int j = -(r - 1) * (s - 1); j <= r - 1 + bump(c); ++j) roots.push_back(p_power(-k * (r - 1) + j * (k + 1)));
  record_coalesced(rep, compare_coalesced(f, mult, roots, q, false), Verdict::conjecture_violated);
}

void rect_qt(const IdentityCase& c, IdentityReport& rep) {
  const int r = need(c.r, "r"), g = need(c.g, "g"), n = need(c.n, "n");
  KappaSpec spec;
  try {
    spec = rectangular_kappa(r, g, n);
  } catch (const std::invalid_argument& e) {
    throw NotApplicable(e.what());
  }
  const int d = n + 1 - g;
  QtMode mode = c.perturb == Perturbation::parameter ? QtMode::power(d, -(r - 1), -1) : QtMode::power(d, -(r - 1));
  MExpansion f = macdonald_symmetric_m(spec.kappa, mode);
  std::vector<FieldElement> mult;
  for (int i = 0; i < n - g; ++i) mult.push_back(p_power(-(r - 1) * i));
  std::vector<FieldElement> roots;
  // Roots t^{N−g} q^j, the pattern of the clustering conjecture with k = N − g.
  for (int j = 0; j <= r - 1 + bump(c); ++j) roots.push_back(p_power(-(r - 1) * (n - g) + j * d));
  record_coalesced(rep, compare_coalesced(f, mult, roots, constant_one(g), false), Verdict::conjecture_violated);
}

void qt_rr(const IdentityCase& c, IdentityReport& rep) {
  const int k = need(c.k, "k"), n = need(c.n, "n");
  if (k < 1 || n % k || n / k < 2) throw NotApplicable("N must be a multiple of k with groups of at least two");
  const int g = n / k;
  KappaSpec spec;
  try {
    spec = build_kappa(k, 2, 1, k, g - 2);
  } catch (const std::invalid_argument& e) {
    throw NotApplicable(e.what());
  }
  QtMode mode = QtMode::power(k + 1, -1);
  QtMode rhs_mode = c.perturb == Perturbation::parameter ? QtMode::power(k + 1, -1, -1) : mode;
  // Built over ℤ[t] and specialized at the end.
  const ParamPoly t = ParamPoly::variable(Param::t);
  RingPoly prod = RingPoly::constant(n, ParamPoly(1));
  for (int grp = 0; grp < k; ++grp)
    for (int i = 0; i < g; ++i)
      for (int j = i + 1; j < g; ++j) {
        const int a = grp * g + i, b = grp * g + j;
        RingPoly pair = (RingPoly::variable(n, a) - RingPoly::variable(n, b, t)) *
                        (RingPoly::variable(n, a, t) - RingPoly::variable(n, b));
        prod = prod * pair.pow(static_cast<unsigned>(1 + bump(c)));
      }
  RingPoly sym = t_symmetrize_cosets(prod, t);
  Poly lhs = sym.map_coefficients([&](const ParamPoly& x) { return mode.map(x); });
  Poly rhs = macdonald_symmetric(spec.kappa, rhs_mode);
  record_proportional(rep, lhs, rhs);
  if (rep.verdict == Verdict::fails) rep.verdict = Verdict::conjecture_violated;
}

void dispatch(const IdentityCase& c, IdentityReport& rep) {
  switch (c.id) {
    case IdentityId::PROP1: return prop1(c, rep);
    case IdentityId::PROP2: return prop2(c, rep);
    case IdentityId::PROP3_H: return prop3(c, rep, false);
    case IdentityId::PROP3_L: return prop3(c, rep, true);
    case IdentityId::EQ14_1: return eq14(c, rep, false);
    case IdentityId::EQ14_2: return eq14(c, rep, true);
    case IdentityId::EQ12_1: return eq12_1(c, rep);
    case IdentityId::PROP4: {
      const int r = need(c.r, "r"), n = need(c.n, "n");
      if (r <= 0 || r % 2) throw NotApplicable("r must be even and positive");
      Partition kappa = need_kappa(c, n);
      QtMode left = c.perturb == Perturbation::parameter ? QtMode::power(2, -(r - 1), -1) : QtMode::power(2, -(r - 1));
      Poly lhs = macdonald_symmetric(kappa + Partition::delta(n).scaled(r), left);
      const int e = r * r * n * (n - 1) / 8 + bump(c);
      FieldElement pre = p_power(-e) * FieldElement(e % 2 ? -1 : 1);
      Poly rhs = dl_product<FieldElement>(n, r / 2, p_power(1)) * macdonald_symmetric(kappa, QtMode::power(2, r + 1));
      rep.constants["prefactor"] = pre;
      return record_equal(rep, lhs, rhs * pre);
    }
    case IdentityId::CLUSTER25_1: return cluster25_1(c, rep);
    case IdentityId::RECT26: return rect26(c, rep);
    case IdentityId::NONSYM26_1: return nonsym26_1(c, rep);
    case IdentityId::NONSYM22_1: return nonsym22_1(c, rep);
    case IdentityId::RR_J3A: return rr_j3a(c, rep);
    case IdentityId::PFAFF: return pfaff(c, rep);
    case IdentityId::HW_LP: return hw_lp(c, rep);
    case IdentityId::LW_LM: return lw_lm(c, rep);
    case IdentityId::B3B5: return b3b5(c, rep);
    case IdentityId::CONJ23_8: return conj23_8(c, rep);
    case IdentityId::RECT_QT: return rect_qt(c, rep);
    case IdentityId::QT_RR: return qt_rr(c, rep);
  }
}

}  // namespace

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (const auto& e : table()) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::string identity_name(IdentityId id) {
  for (const auto& e : table())
    if (e.id == id) return e.name;
  throw std::logic_error("unknown identity id");
}

IdentityId parse_identity(const std::string& name) {
  for (const auto& e : table())
    if (name == e.name) return e.id;
  throw std::invalid_argument("unknown identity: " + name);
}

bool is_conjecture(IdentityId id) {
  return id == IdentityId::CONJ23_8 || id == IdentityId::RECT_QT || id == IdentityId::QT_RR;
}

std::string identity_statement(IdentityId id) {
  for (const auto& e : table())
    if (e.id == id) return e.statement;
  throw std::logic_error("unknown identity id");
}

std::string IdentityCase::key() const {
  std::ostringstream out;
  out << identity_name(id);
  auto put = [&](const char* name, const std::optional<int>& v) {
    if (v) out << ' ' << name << '=' << *v;
  };
  put("k", k);
  put("r", r);
  put("s", s);
  put("m", m);
  put("b", b);
  put("n", n);
  put("l", l);
  put("g", g);
  if (kappa) {
    out << " kappa=";
    for (int i = 0; i < kappa->size(); ++i) out << (i ? "," : "") << (*kappa)[i];
  }
  if (perturb == Perturbation::exponent) out << " perturb=exponent";
  if (perturb == Perturbation::parameter) out << " perturb=parameter";
  return out.str();
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::not_applicable: return "not-applicable";
    case Verdict::conjecture_consistent: return "conjecture-consistent";
    case Verdict::conjecture_violated: return "conjecture-violated";
    case Verdict::error: return "error";
  }
  return "error";
}

Verdict parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::holds, Verdict::fails, Verdict::not_applicable, Verdict::conjecture_consistent,
                    Verdict::conjecture_violated, Verdict::error})
    if (verdict_name(v) == s) return v;
  throw ParseError("unknown verdict: " + s);
}

IdentityReport verify(const IdentityCase& c) {
  IdentityReport rep;
  rep.which = c;
  rep.verdict = is_conjecture(c.id) ? Verdict::conjecture_consistent : Verdict::holds;
  const auto start = std::chrono::steady_clock::now();
  try {
    dispatch(c, rep);
  } catch (const NotApplicable& e) {
    rep = IdentityReport{c, Verdict::not_applicable, {}, {}, e.what()};
  } catch (const PoleError& e) {
    rep = IdentityReport{c, Verdict::error, {}, {}, std::string("pole: ") + e.what()};
  } catch (const std::exception& e) {
    rep = IdentityReport{c, Verdict::error, {}, {}, e.what()};
  }
  rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace jackclust
