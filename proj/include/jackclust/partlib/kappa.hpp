#pragma once

#include "jackclust/exactnum/big_rational.hpp"
#include "jackclust/partlib/partition.hpp"

namespace jackclust {

struct KappaSpec {
  Partition kappa;
  int n = 0;
  int n0 = 0;  // number of zero parts, (k+1)s − 1
  BigRational alpha;
};

// Staircase partition with frequencies [n0 0^{(r−1)s} k 0^{r−1} k … 0^{r−1} m], b interior
// k-blocks below the top m-block; N = n0 + bk + m and α = −(k+1)/(r−1).
// Requires gcd(k+1, r−1) = 1 and 1 ≤ m ≤ k.
KappaSpec build_kappa(int k, int r, int s, int m, int b);

// Nonzero parts of κ minus the smallest nonzero part, as a partition of length l(κ).
Partition reduced_kappa(const Partition& kappa);

// r^g padded to N, with α = −(N+1−g)/(r−1). Requires N ≥ 2g.
KappaSpec rectangular_kappa(int r, int g, int n);

// κ_i − κ_{i+k} ≥ r over consecutive nonzero parts.
bool satisfies_exclusion(const Partition& kappa, int k, int r);

}  // namespace jackclust
