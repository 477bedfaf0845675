#pragma once

#include "jackclust/mpoly/operators.hpp"

namespace jackclust {

// ξ_i = α z_i d_i + 1 − N + Σ_{p>i} s_ip, where α z_i d_i = α z_i ∂_i + z_i Σ_{k≠i} (1 − s_ik)/(z_i − z_k).
template <class S>
MPoly<S> cherednik_apply(const MPoly<S>& f, int i, const S& alpha) {
  const int n = f.nvars();
  MPoly<S> dsum(n);
  for (int k = 0; k < n; ++k)
    if (k != i) dsum += divided_difference(f, i, k);
  MPoly<S> r = euler_operator(f, i) * alpha + MPoly<S>::variable(n, i) * dsum + f * S(static_cast<long>(1 - n));
  for (int p = i + 1; p < n; ++p) r += swap_variables(f, i, p);
  return r;
}

// α·Σ(z_j∂_j)² f + Σ_{j<k} (z_j+z_k)(z_j∂_j − z_k∂_k)f/(z_j − z_k); P_κ(α) is an
// eigenfunction on symmetric input.
template <class S>
MPoly<S> sutherland_apply(const MPoly<S>& f, const S& alpha) {
  const int n = f.nvars();
  MPoly<S> r(n);
  std::vector<MPoly<S>> euler(n);
  for (int j = 0; j < n; ++j) {
    euler[j] = euler_operator(f, j);
    r += euler_operator(euler[j], j) * alpha;
  }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      MPoly<S> g = euler[j] - euler[k];
      MPoly<S> quotient = divide_or_throw(g, MPoly<S>::variable(n, j) - MPoly<S>::variable(n, k), "sutherland_apply");
      r += (MPoly<S>::variable(n, j) + MPoly<S>::variable(n, k)) * quotient;
    }
  return r;
}

// L⁺ f = Σ_j ∂f/∂z_j.
template <class S>
MPoly<S> highest_weight_apply(const MPoly<S>& f) {
  MPoly<S> r(f.nvars());
  for (int j = 0; j < f.nvars(); ++j) r += partial_derivative(f, j);
  return r;
}

// L⁻ f = Σ_j z_j² ∂f/∂z_j − N_φ (Σ_j z_j) f, the degree-raising companion of L⁺.
template <class S>
MPoly<S> lowest_weight_apply(const MPoly<S>& f, long n_phi) {
  const int n = f.nvars();
  MPoly<S> r(n), e1(n);
  for (int j = 0; j < n; ++j) {
    MPoly<S> zj = MPoly<S>::variable(n, j);
    r += zj * euler_operator(f, j);
    e1 += zj;
  }
  return r - e1 * f * S(n_phi);
}

// Σ_j z_j² ∂²f/∂z_j² + N_φ Σ_j z_j ∂f/∂z_j, the operator in the form usually displayed.
template <class S>
MPoly<S> lowest_weight_apply_displayed(const MPoly<S>& f, long n_phi) {
  const int n = f.nvars();
  MPoly<S> r(n);
  for (int j = 0; j < n; ++j) {
    MPoly<S> zj = MPoly<S>::variable(n, j);
    r += zj * zj * partial_derivative(partial_derivative(f, j), j) + euler_operator(f, j) * S(n_phi);
  }
  return r;
}

}  // namespace jackclust
