#pragma once

#include <vector>

#include "jackclust/partlib/partition.hpp"

namespace jackclust {

// μ < κ: every prefix sum of μ is ≤ that of κ, and μ ≠ κ. Requires |μ| = |κ|.
bool dominance_less(const Partition& mu, const Partition& kappa);

// ν ≺ η: ν⁺ < η⁺ in dominance, or ν⁺ = η⁺ and ν is obtained from η by swaps
// η_i > η_j, i < j. The second case uses the prefix-count criterion
// #{i ≤ p : ν_i ≥ v} ≤ #{i ≤ p : η_i ≥ v} for all p, v.
bool bruhat_less(const Composition& nu, const Composition& eta);

// #{i < j : c_i > c_j}.
int inversions(const Composition& c);

// All μ ≤ κ (κ included) with |μ| = |κ| and at most κ.size() parts, in lex-descending
// order, which extends dominance (κ first).
std::vector<Partition> partitions_below(const Partition& kappa);

// All ν ⪯ η (η included), ordered so every ν comes after all compositions above it:
// ν⁺ lex-descending, then inversions descending, then lex-descending.
std::vector<Composition> compositions_below(const Composition& eta);

// Distinct rearrangements of μ in the order used by compositions_below.
std::vector<Composition> rearrangements(const Partition& mu);

// Increasing arrangement of κ (the Bruhat-minimal composition with ν⁺ = κ).
Composition increasing_arrangement(const Partition& kappa);

}  // namespace jackclust
