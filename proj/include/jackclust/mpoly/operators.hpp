#pragma once

#include <numeric>
#include <vector>

#include "jackclust/mpoly/mpoly.hpp"

namespace jackclust {

// Variable permutation: z_i is renamed to z_{perm[i]}.
template <class S>
MPoly<S> permute_variables(const MPoly<S>& f, const std::vector<int>& perm) {
  std::vector<typename MPoly<S>::Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < f.nvars(); ++i) m.set(perm[i], t.first[i]);
    out.emplace_back(m, t.second);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return grlex_greater(a.first, b.first); });
  return MPoly<S>::from_sorted_terms(f.nvars(), std::move(out));
}

// s_ik: interchange z_i and z_k (0-based indices).
template <class S>
MPoly<S> swap_variables(const MPoly<S>& f, int i, int k) {
  std::vector<int> perm(f.nvars());
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[i], perm[k]);
  return permute_variables(f, perm);
}

// σ_i: z_i ↦ −z_i.
template <class S>
MPoly<S> reflect_variable(const MPoly<S>& f, int i) {
  auto terms = f.terms();
  for (auto& t : terms)
    if (t.first[i] % 2) t.second = S(0) - t.second;
  return MPoly<S>::from_sorted_terms(f.nvars(), std::move(terms));
}

// T_{q,z_i}: z_i ↦ q z_i.
template <class S>
MPoly<S> q_shift(const MPoly<S>& f, int i, const S& q) {
  std::vector<S> powers{S(1)};
  std::vector<typename MPoly<S>::Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    int e = t.first[i];
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * q);
    S c = t.second * powers[e];
    if (!c.is_zero()) out.emplace_back(t.first, std::move(c));
  }
  return MPoly<S>::from_sorted_terms(f.nvars(), std::move(out));
}

// ∂/∂z_i.
template <class S>
MPoly<S> partial_derivative(const MPoly<S>& f, int i) {
  std::vector<typename MPoly<S>::Term> out;
  for (const auto& t : f.terms()) {
    int e = t.first[i];
    if (e == 0) continue;
    Monomial m = t.first;
    m.set(i, e - 1);
    out.emplace_back(m, t.second * S(static_cast<long>(e)));
  }
  return MPoly<S>::from_sorted_terms(f.nvars(), std::move(out));
}

// z_i ∂/∂z_i.
template <class S>
MPoly<S> euler_operator(const MPoly<S>& f, int i) {
  std::vector<typename MPoly<S>::Term> out;
  for (const auto& t : f.terms())
    if (t.first[i] != 0) out.emplace_back(t.first, t.second * S(static_cast<long>(t.first[i])));
  return MPoly<S>::from_sorted_terms(f.nvars(), std::move(out));
}

// (f − s_ik f)/(z_i − z_k), computed monomial by monomial:
// (z_i^a z_k^b − z_i^b z_k^a)/(z_i − z_k) = z_i^b z_k^b (z_i^{a−b} − z_k^{a−b})/(z_i − z_k) for a > b.
template <class S>
MPoly<S> divided_difference(const MPoly<S>& f, int i, int k) {
  TermAccumulator<S> acc(f.nvars());
  for (const auto& t : f.terms()) {
    int a = t.first[i], b = t.first[k];
    if (a == b) continue;
    int lo = std::min(a, b), d = std::abs(a - b);
    S c = a > b ? t.second : S(0) - t.second;
    Monomial m = t.first;
    for (int j = 0; j < d; ++j) {
      m.set(i, lo + d - 1 - j);
      m.set(k, lo + j);
      acc.add(m, c);
    }
  }
  return acc.finish();
}

namespace detail {
inline int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}
}  // namespace detail

// Σ_σ (sign σ)^{anti} σf over all N! permutations.
template <class S>
MPoly<S> symmetrize_impl(const MPoly<S>& f, bool anti) {
  std::vector<int> perm(f.nvars());
  std::iota(perm.begin(), perm.end(), 0);
  TermAccumulator<S> acc(f.nvars());
  do {
    S scale = anti && detail::permutation_sign(perm) < 0 ? S(-1) : S(1);
    for (const auto& t : f.terms()) {
      Monomial m;
      for (int i = 0; i < f.nvars(); ++i) m.set(perm[i], t.first[i]);
      acc.add(m, t.second * scale);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc.finish();
}

template <class S>
MPoly<S> symmetrize(const MPoly<S>& f) {
  return symmetrize_impl(f, false);
}

template <class S>
MPoly<S> antisymmetrize(const MPoly<S>& f) {
  return symmetrize_impl(f, true);
}

template <class S>
bool is_symmetric(const MPoly<S>& f) {
  for (int i = 0; i + 1 < f.nvars(); ++i)
    if (swap_variables(f, i, i + 1) != f) return false;
  return true;
}

}  // namespace jackclust
