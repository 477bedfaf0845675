#pragma once

#include <map>
#include <vector>

#include "jackclust/mpoly/operators.hpp"

namespace jackclust {

// T_i f = t f + (t z_i − z_{i+1})(s_i f − f)/(z_i − z_{i+1}) = t f − (t z_i − z_{i+1}) DD_{i,i+1} f (0-based i).
template <class S>
MPoly<S> hecke_apply(const MPoly<S>& f, int i, const S& t) {
  const int n = f.nvars();
  if (i < 0 || i + 1 >= n) throw std::out_of_range("hecke_apply: index");
  MPoly<S> lin = MPoly<S>::variable(n, i, t) - MPoly<S>::variable(n, i + 1);
  return f * t - lin * divided_difference(f, i, i + 1);
}

// t·T_i^{-1} = T_i − (t − 1), polynomial in t.
template <class S>
MPoly<S> hecke_scaled_inverse_apply(const MPoly<S>& f, int i, const S& t) {
  return hecke_apply(f, i, t) - f * (t - S(1));
}

// (ωf)(z) = f(q z_N, z_1, …, z_{N−1}).
template <class S>
MPoly<S> omega_apply(const MPoly<S>& f, const S& q) {
  const int n = f.nvars();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = (i + n - 1) % n;
  return permute_variables(q_shift(f, 0, q), perm);
}

// t^{N−1} Y_i = T_i ⋯ T_{N−1} ω (tT_1^{-1}) ⋯ (tT_{i−1}^{-1}), applied right to left (0-based i).
template <class S>
MPoly<S> y_scaled_apply(const MPoly<S>& f, int i, const S& q, const S& t) {
  const int n = f.nvars();
  MPoly<S> g = f;
  for (int j = i - 1; j >= 0; --j) g = hecke_scaled_inverse_apply(g, j, t);
  g = omega_apply(g, q);
  for (int j = n - 2; j >= i; --j) g = hecke_apply(g, j, t);
  return g;
}

// M_1 f on symmetric f via Σ_{j=1}^{N} T_j ⋯ T_{N−1} T_{q,z_N} f.
template <class S>
MPoly<S> m1_hecke_apply(const MPoly<S>& f, const S& q, const S& t) {
  const int n = f.nvars();
  MPoly<S> h = q_shift(f, n - 1, q);
  MPoly<S> acc = h;
  for (int j = n - 2; j >= 0; --j) {
    h = hecke_apply(h, j, t);
    acc += h;
  }
  return acc;
}

// M_1 f = Σ_i Π_{j≠i} (t z_i − z_j)/(z_i − z_j) T_{q,z_i} f, over the common denominator Δ(z).
template <class S>
MPoly<S> m1_direct_apply(const MPoly<S>& f, const S& q, const S& t) {
  const int n = f.nvars();
  auto z = [n](int i) { return MPoly<S>::variable(n, i); };
  MPoly<S> numer(n), delta = MPoly<S>::constant(n, S(1));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) delta = delta * (z(j) - z(k));
  for (int i = 0; i < n; ++i) {
    MPoly<S> term = q_shift(f, i, q) * (i % 2 ? S(-1) : S(1));
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      term = term * (MPoly<S>::variable(n, i, t) - z(j));
      for (int k = j + 1; k < n; ++k)
        if (k != i) term = term * (z(j) - z(k));
    }
    numer += term;
  }
  return divide_or_throw(numer, delta, "m1_direct_apply");
}

// Which reduced word represents a permutation: the smallest or the largest left descent first.
enum class ReducedWord { first_descent, last_descent };

// U⁺ f = Σ_σ T_σ f, or U⁻ f = Σ_σ (−1/t)^{l(σ)} T_σ f when anti is set. T_σ is built by
// prepending one generator at a time along the chosen reduced words.
template <class S>
MPoly<S> t_symmetrize(const MPoly<S>& f, const S& t, bool anti, ReducedWord word = ReducedWord::first_descent) {
  const int n = f.nvars();
  if (n > 7) throw std::invalid_argument("t_symmetrize: explicit S_N sum limited to N <= 7");
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::map<std::vector<int>, MPoly<S>> level{{id, f}};
  MPoly<S> total = f;
  S weight(1);
  const S step = anti ? S(-1) / t : S(1);
  while (!level.empty()) {
    weight = weight * step;
    std::map<std::vector<int>, MPoly<S>> next;
    for (const auto& [perm, g] : level) {
      // perm is a word in one-line notation; s_i·perm has length one more iff perm^{-1}(i) < perm^{-1}(i+1).
      std::vector<int> inv(n);
      for (int k = 0; k < n; ++k) inv[perm[k]] = k;
      for (int i = 0; i + 1 < n; ++i) {
        if (inv[i] > inv[i + 1]) continue;
        std::vector<int> up = perm;
        std::swap(up[inv[i]], up[inv[i + 1]]);
        if (next.count(up)) continue;
        // Choose the canonical last letter for up: its smallest or largest left descent.
        std::vector<int> upinv(n);
        for (int k = 0; k < n; ++k) upinv[up[k]] = k;
        int chosen = -1;
        for (int d = 0; d + 1 < n; ++d)
          if (upinv[d] > upinv[d + 1]) {
            if (chosen < 0 || word == ReducedWord::last_descent) chosen = d;
          }
        if (chosen != i) continue;
        next.emplace(up, hecke_apply(g, i, t));
      }
    }
    for (const auto& [perm, g] : next) total += g * weight;
    level = std::move(next);
  }
  return total;
}

// U⁺ f through the parabolic factorization U⁺_{S_m} = U⁺_{S_{m−1}} Σ_c T_c over minimal coset
// representatives c = s_{m−1} ⋯ s_j; N(N−1)/2 Hecke steps instead of N!.
template <class S>
MPoly<S> t_symmetrize_cosets(const MPoly<S>& f, const S& t) {
  MPoly<S> g = f;
  for (int m = f.nvars(); m >= 2; --m) {
    MPoly<S> h = g;
    for (int j = 0; j + 2 <= m; ++j) h = g + hecke_apply(h, j, t);
    g = std::move(h);
  }
  return g;
}

}  // namespace jackclust
