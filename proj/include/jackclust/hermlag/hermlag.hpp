#pragma once

#include <optional>
#include <string>

#include "jackclust/jackcore/jack.hpp"

namespace jackclust {

enum class DunklType { A, B };

// Laguerre parameter: symbolic a (the default) or a fixed rational value.
class LaguerreParam {
 public:
  static LaguerreParam symbolic() { return LaguerreParam(); }
  static LaguerreParam at(const BigRational& v) {
    LaguerreParam p;
    p.value_ = v;
    return p;
  }
  bool is_symbolic() const { return !value_.has_value(); }
  FieldElement value(ParamMask field) const;
  ParamMask field() const { return is_symbolic() ? mask_of(Param::a) : 0; }
  std::string key() const;

 private:
  std::optional<BigRational> value_;
};

struct DunklConfig {
  DunklType type = DunklType::A;
  AlphaMode alpha = AlphaMode::generic();
  LaguerreParam a = LaguerreParam::symbolic();  // used by type B only
  ParamMask field() const;                      // coefficient field of the operator
};

// Polynomial in y that is even in every variable, standing for a polynomial in x = y².
class EvenPoly {
 public:
  static EvenPoly from_x(const Poly& f);
  // Throws unless every exponent of g is even.
  static EvenPoly from_y(const Poly& g);
  const Poly& y() const { return y_; }
  Poly to_x() const;

 private:
  Poly y_;
};

// d_i (type A) or d_i^{(B)} applied to f (0-based i).
Poly dunkl_apply(const Poly& f, const DunklConfig& cfg, int i);
// Σ_i d_i² f. Type B throws unless f is even in every variable.
Poly laplacian_apply(const Poly& f, const DunklConfig& cfg);

// exp(−Δ/4) f = Σ_{m=0}^{⌊d/2⌋} (−1/4)^m/m! Δ^m f for f of degree d.
Poly exp_laplacian(const Poly& f, const DunklConfig& cfg);

// E_η^{(H)} = exp(−Δ_A/4) E_η, and P_κ^{(H)} = exp(−Δ_A/4) P_κ.
Poly hermite_nonsymmetric(const Composition& eta, const AlphaMode& mode);
Poly hermite_symmetric(const Partition& kappa, const AlphaMode& mode);

// Laguerre polynomials in x, from exp(−Δ_B/4) applied to the Jack polynomial in y².
Poly laguerre_nonsymmetric(const Composition& eta, const AlphaMode& mode, const LaguerreParam& a);
Poly laguerre_symmetric(const Partition& kappa, const AlphaMode& mode, const LaguerreParam& a);

// The binomial expansion
//   P^{(L)}_κ = (−1)^{|κ|} Σ_{μ⊆κ} c_μ (−1)^{|μ|} ([a+h]_κ/[a+h]_μ) P_μ(x),  h = 1 + (N−1)/α,
// where c_μ is the coefficient of P_μ(x) in P_κ(1+x).
Poly laguerre_binomial(const Partition& kappa, const AlphaMode& mode, const LaguerreParam& a);

// [u]_κ/[u]_μ = Π_j Π_{i=μ_j}^{κ_j−1} (u − (j−1)/α + i), for μ ⊆ κ.
FieldElement pochhammer_ratio(const FieldElement& u, const Partition& kappa, const Partition& mu, const FieldElement& alpha);

struct HwCoincidence {
  bool highest_weight = false;  // L⁺ P_κ = 0
  bool laguerre_equal = false;  // P^{(L)}_κ = P_κ (exponential route, symbolic a)
  bool hermite_equal = false;   // P^{(H)}_κ = P_κ
};
HwCoincidence verify_hw_coincidence(const Partition& kappa, const AlphaMode& mode);

// Coefficients of f converted into the given (larger) field.
Poly lift_field(const Poly& f, ParamMask field);

}  // namespace jackclust
