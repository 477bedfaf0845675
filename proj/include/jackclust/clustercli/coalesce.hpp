#pragma once

#include <vector>

#include "jackclust/jackcore/msym.hpp"

namespace jackclust {

// Checks f(w_1, …, w_n, c_1 z, …, c_{n0} z) = Π_j Π_{ρ∈roots} (w_j − ρ z) · Q(w) for symmetric f
// (N = n + n0 variables) and symmetric Q (n variables), both given in the m_μ basis.
// Both sides are symmetric in w, so they are compared on the coefficients of w^a z^c with a
// weakly decreasing. With dehomogenize set, z = 1 and the comparison is on w^a alone.
struct CoalesceComparison {
  bool equal = true;
  std::size_t compared = 0;  // number of coefficients compared
  Poly residual;             // Σ (lhs − rhs) w^a z^c over dominant monomials; z is the last variable
};

CoalesceComparison compare_coalesced(const MExpansion& f, const std::vector<FieldElement>& multipliers,
                                     const std::vector<FieldElement>& roots, const MExpansion& q, bool dehomogenize);

}  // namespace jackclust
