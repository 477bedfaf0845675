#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "jackclust/mpoly/operators.hpp"

namespace jackclust {

// a·z_i + b·z_k as a polynomial.
template <class S>
MPoly<S> linear_form(int n, int i, const S& a, int k, const S& b) {
  return MPoly<S>::variable(n, i, a) + MPoly<S>::variable(n, k, b);
}

// Δ(z) = Π_{j<k} (z_j − z_k).
template <class S>
MPoly<S> vandermonde(int n) {
  MPoly<S> r = MPoly<S>::constant(n, S(1));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) r = r * linear_form<S>(n, j, S(1), k, S(-1));
  return r;
}

// Δ_t(z) = Π_{j<k} (t z_j − z_k).
template <class S>
MPoly<S> t_vandermonde(int n, const S& t) {
  MPoly<S> r = MPoly<S>::constant(n, S(1));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) r = r * linear_form<S>(n, j, t, k, S(-1));
  return r;
}

// D_1(z;x) = Π_{i≠j} (x z_j − z_i).
template <class S>
MPoly<S> d1_product(int n, const S& x) {
  MPoly<S> r = MPoly<S>::constant(n, S(1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) r = r * linear_form<S>(n, j, x, i, S(-1));
  return r;
}

// Π_{i=0}^{l−1} D_1(z; x^{2i+1}).
template <class S>
MPoly<S> dl_product(int n, int l, const S& x) {
  MPoly<S> r = MPoly<S>::constant(n, S(1));
  S x2 = x * x, xi = x;
  for (int i = 0; i < l; ++i) {
    r = r * d1_product<S>(n, xi);
    xi = xi * x2;
  }
  return r;
}

// Pf[1/(z_k − z_l)]·Δ(z): each perfect matching contributes its sign times the
// product of the Vandermonde factors not cancelled by the matched pairs.
template <class S>
MPoly<S> pfaffian_product(int n) {
  if (n <= 0 || n % 2) throw std::invalid_argument("pfaffian_product needs a positive even size");
  MPoly<S> total(n);
  std::vector<int> order;
  std::vector<bool> used(n, false);
  std::function<void()> rec = [&]() {
    int first = -1;
    for (int i = 0; i < n; ++i)
      if (!used[i]) {
        first = i;
        break;
      }
    if (first < 0) {
      std::vector<std::vector<bool>> matched(n, std::vector<bool>(n, false));
      for (std::size_t p = 0; p < order.size(); p += 2) matched[order[p]][order[p + 1]] = true;
      MPoly<S> term = MPoly<S>::constant(n, S(static_cast<long>(detail::permutation_sign(order))));
      for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          if (!matched[j][k]) term = term * linear_form<S>(n, j, S(1), k, S(-1));
      total += term;
      return;
    }
    used[first] = true;
    order.push_back(first);
    for (int j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      order.push_back(j);
      rec();
      order.pop_back();
      used[j] = false;
    }
    order.pop_back();
    used[first] = false;
  };
  rec();
  return total;
}

// Distinct rearrangements of an exponent vector (the orbit of a partition).
inline std::vector<std::vector<int>> distinct_permutations(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(parts);
  } while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

// Monomial symmetric polynomial m_λ in n variables (λ padded with zeros).
template <class S>
MPoly<S> monomial_symmetric(int n, std::vector<int> lambda) {
  lambda.resize(n, 0);
  std::vector<typename MPoly<S>::Term> terms;
  for (const auto& e : distinct_permutations(lambda)) terms.emplace_back(Monomial::from_exponents(e), S(1));
  return MPoly<S>::from_terms(n, std::move(terms));
}

// Replacement for one variable: coef·z_target, or the constant coef when target is empty.
template <class S>
struct VarReplacement {
  S coef;
  std::optional<int> target;
};

// Substitutes z_i ↦ plan[i] into f, producing a polynomial in out_nvars variables.
template <class S>
MPoly<S> substitute(const MPoly<S>& f, const std::vector<VarReplacement<S>>& plan, int out_nvars) {
  if (static_cast<int>(plan.size()) != f.nvars()) throw std::invalid_argument("substitute: plan size mismatch");
  for (const auto& r : plan)
    if (r.target && (*r.target < 0 || *r.target >= out_nvars)) throw std::out_of_range("substitute: bad target");
  std::vector<std::vector<S>> powers(plan.size(), std::vector<S>{S(1)});
  TermAccumulator<S> acc(out_nvars);
  for (const auto& t : f.terms()) {
    Monomial m;
    S c = t.second;
    for (int i = 0; i < f.nvars(); ++i) {
      int e = t.first[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * plan[i].coef);
      c = c * pw[e];
      if (plan[i].target) m.set(*plan[i].target, m[*plan[i].target] + e);
    }
    acc.add(m, c);
  }
  return acc.finish();
}

// f(z + shift): z_i ↦ z_i + shift[i].
template <class S>
MPoly<S> translate(const MPoly<S>& f, const std::vector<S>& shift) {
  const int n = f.nvars();
  MPoly<S> result(n);
  std::vector<std::vector<MPoly<S>>> powers(n);
  for (int i = 0; i < n; ++i) powers[i].push_back(MPoly<S>::constant(n, S(1)));
  for (const auto& t : f.terms()) {
    MPoly<S> term = MPoly<S>::constant(n, t.second);
    for (int i = 0; i < n; ++i) {
      int e = t.first[i];
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e)
        pw.push_back(pw.back() * (MPoly<S>::variable(n, i) + MPoly<S>::constant(n, shift[i])));
      if (e) term = term * pw[e];
    }
    result += term;
  }
  return result;
}

// f evaluated at z = point.
template <class S>
S evaluate(const MPoly<S>& f, const std::vector<S>& point) {
  S total(0);
  for (const auto& t : f.terms()) {
    S c = t.second;
    for (int i = 0; i < f.nvars(); ++i)
      for (int e = 0; e < t.first[i]; ++e) c = c * point[i];
    total = total + c;
  }
  return total;
}

}  // namespace jackclust
