#pragma once

#include "jackclust/exactnum/field_element.hpp"
#include "jackclust/partlib/partition.hpp"

namespace jackclust {

// Indices below are 0-based; formulas are stated with 1-based j.

// Σκ_j(κ_j−1) + (α(N−1)+1)|κ| − 2αΣ(j−1)κ_j over ℚ(α).
FieldElement eigen_jack_sym(const Partition& kappa);

// Eigenvalue of α·(Σ(z_j∂_j)² + (1/α)Σ_{j<k} (z_j+z_k)/(z_j−z_k)(z_j∂_j − z_k∂_k)) on P_κ(α):
// αΣκ_j² + Σ(N+1−2j)κ_j, which equals α·e(κ; 1/α).
ParamPoly sutherland_eigenvalue(const Partition& kappa);

// αη_i − #{k<i : η_k ≥ η_i} − #{k>i : η_k > η_i}.
FieldElement eigen_jack_nonsym(const Composition& eta, int i);
ParamPoly eigen_jack_nonsym_poly(const Composition& eta, int i);

// Σ q^{κ_i} t^{N−i} over ℚ(q,t).
FieldElement eigen_macdonald_sym(const Partition& kappa);
ParamPoly eigen_macdonald_sym_poly(const Partition& kappa);

// l'_η(i) = #{j<i : η_j ≥ η_i} + #{j>i : η_j > η_i}.
int l_prime(const Composition& eta, int i);
// The variant with a minus sign between the two counts.
int l_prime_minus(const Composition& eta, int i);

// q^{η_i} t^{−l'_η(i)}, the Y_i eigenvalue.
FieldElement eigen_macdonald_nonsym(const Composition& eta, int i);
// q^{η_i} t^{N−1−l'_η(i)}, the eigenvalue of t^{N−1}Y_i (a polynomial).
ParamPoly eigen_macdonald_nonsym_scaled(const Composition& eta, int i);

}  // namespace jackclust
