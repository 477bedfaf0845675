#pragma once

#include <functional>
#include <map>

#include "jackclust/mpoly/serialize.hpp"
#include "jackclust/partlib/partition.hpp"

namespace jackclust {

// Symmetric polynomial as coefficients on the monomial symmetric functions m_μ.
struct MExpansion {
  int n = 0;
  std::map<Partition, FieldElement, std::greater<>> coef;  // lex-descending, zero entries absent
};

Poly m_to_poly(const MExpansion& f);
// Reads the coefficients of the dominant monomials; throws unless f is symmetric.
MExpansion poly_to_m(const Poly& f);
// Number of distinct rearrangements of μ.
mpz_class orbit_size(const Partition& mu);
// f(1, …, 1).
FieldElement evaluate_at_ones(const MExpansion& f);
MExpansion map_coefficients(const MExpansion& f, const std::function<FieldElement(const FieldElement&)>& fn);

// L⁺ = Σ ∂_j in the m basis: m_μ ↦ Σ_v v·mult_λ(v−1) m_λ, λ = μ with one part v lowered.
MExpansion highest_weight_m(const MExpansion& f);
// L⁻ = Σ z_j²∂_j − N_φ e_1 in the m basis: m_μ ↦ Σ_v mult_λ(v+1)(v − N_φ) m_λ, λ = μ with one part v raised.
MExpansion lowest_weight_m(const MExpansion& f, const FieldElement& n_phi);

}  // namespace jackclust
