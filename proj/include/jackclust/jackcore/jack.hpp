#pragma once

#include <map>
#include <string>

#include "jackclust/jackcore/alpha_mode.hpp"
#include "jackclust/jackcore/msym.hpp"
#include "jackclust/partlib/partition.hpp"

namespace jackclust {

enum class JackFamily { nonsymmetric, symmetric, antisymmetric };

enum class JackMethod {
  automatic,   // Cherednik route when the composition count is small, else Sutherland
  cherednik,   // P_κ = Sym E_η normalized, η the increasing arrangement of κ
  sutherland,  // triangular solve in the m_μ basis
};

struct JackResult {
  JackFamily family;
  Composition label;
  Poly poly;
  AlphaMode alpha;
};

// E_η = z^η + Σ_{ν≺η} c_ν z^ν, joint eigenfunction of the ξ_i; the eigen equations are
// rechecked on the result. Specialized α whose pivots all vanish falls back to the
// generic solution and specializes it (PoleError if that has a pole there).
Poly jack_nonsymmetric(const Composition& eta, const AlphaMode& mode);

// Symmetric P_κ in the m_μ basis and as a polynomial.
MExpansion jack_symmetric_m(const Partition& kappa, const AlphaMode& mode, JackMethod method = JackMethod::automatic);
Poly jack_symmetric(const Partition& kappa, const AlphaMode& mode, JackMethod method = JackMethod::automatic);

// S_{κ+δ}(α) = Δ(z) P_κ(α/(1+α)); PoleError at α = −1.
Poly jack_antisymmetric(const Partition& kappa, const AlphaMode& mode);
// Asym E_ρ with ρ = increasing arrangement of κ+δ, normalized to coefficient 1 on z^{κ+δ}.
Poly jack_antisymmetric_via_nonsymmetric(const Partition& kappa, const AlphaMode& mode);

JackResult jack_compute(JackFamily family, const Composition& label, const AlphaMode& mode);

// Coefficients of a symmetric f in the {P_μ} basis.
std::map<Partition, FieldElement, std::greater<>> jack_basis_expand(const Poly& f, const AlphaMode& mode);

struct BinomialValue {
  FieldElement value;
  // True when P_κ(1^N) = 0; value is then P_κ(1^N)·(κ choose μ)/P_μ(1^N), the
  // coefficient of P_μ(x) in P_κ(1+x).
  bool rescaled = false;
};
// Generalized binomial coefficient (κ choose μ) from P_κ(1+x)/P_κ(1^N) = Σ (κ μ) P_μ(x)/P_μ(1^N).
BinomialValue binomial_coefficient(const Partition& kappa, const Partition& mu, const AlphaMode& mode);
// All coefficients at once: μ ↦ coefficient of P_μ(x) in P_κ(1+x).
std::map<Partition, FieldElement, std::greater<>> shifted_expansion(const Partition& kappa, const AlphaMode& mode);

// N_φ = 2|κ|/N; throws unless N divides 2|κ|.
long n_phi(const Partition& kappa);

// Number of compositions below the increasing arrangement of κ (Cherednik route size).
std::size_t cherednik_basis_size(const Partition& kappa);

}  // namespace jackclust
