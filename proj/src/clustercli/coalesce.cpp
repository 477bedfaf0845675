#include "jackclust/clustercli/coalesce.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "jackclust/mpoly/special.hpp"

namespace jackclust {

namespace {

using Key = std::vector<int>;  // a_1, …, a_n, c
using CoefMap = std::unordered_map<Key, FieldElement, CompositionHash>;

void add_to(CoefMap& m, const Key& k, const FieldElement& v) {
  if (v.is_zero()) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, v);
  } else {
    it->second += v;
  }
}

// Σ over distinct arrangements ν of the multiset rest of Π_i mult[i]^{ν_i}.
FieldElement arrangement_weight(std::vector<int> rest, const std::vector<FieldElement>& mult, bool uniform,
                                 std::vector<std::vector<FieldElement>>& powers) {
  auto pw = [&](int i, int e) -> const FieldElement& {
    auto& row = powers[i];
    while (static_cast<int>(row.size()) <= e) row.push_back(row.back() * mult[i]);
    return row[e];
  };
  std::sort(rest.begin(), rest.end());
  if (uniform) {
    // multinomial(n0; multiplicities) · c^{Σ rest}
    mpz_class count = 1, fact_n = 1;
    for (std::size_t i = 2; i <= rest.size(); ++i) fact_n *= static_cast<unsigned long>(i);
    count = fact_n;
    for (std::size_t i = 0; i < rest.size();) {
      std::size_t j = i;
      while (j < rest.size() && rest[j] == rest[i]) ++j;
      mpz_class f = 1;
      for (std::size_t x = 2; x <= j - i; ++x) f *= static_cast<unsigned long>(x);
      count /= f;
      i = j;
    }
    int total = 0;
    for (int v : rest) total += v;
    return FieldElement(count) * (mult.empty() ? FieldElement(1) : pw(0, total));
  }
  FieldElement s(0);
  do {
    FieldElement term(1);
    for (std::size_t i = 0; i < rest.size(); ++i) term = term * pw(static_cast<int>(i), rest[i]);
    s += term;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return s;
}

CoefMap coalesce_lhs(const MExpansion& f, const std::vector<FieldElement>& mult, int n_free) {
  const int n0 = static_cast<int>(mult.size());
  bool uniform = true;
  for (const auto& c : mult)
    if (c != mult.front()) uniform = false;
  std::vector<std::vector<FieldElement>> powers(mult.size());
  for (auto& row : powers) row.push_back(FieldElement(1));
  CoefMap out;
  Key key(n_free + 1);
  for (const auto& [mu, cmu] : f.coef) {
    // Distinct parts with multiplicities; choose how many copies of each go to the free block.
    std::vector<std::pair<int, int>> groups;
    for (int v : mu.parts()) {
      if (!groups.empty() && groups.back().first == v) {
        ++groups.back().second;
      } else {
        groups.emplace_back(v, 1);
      }
    }
    std::vector<int> take(groups.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t g, int remaining) {
      if (g == groups.size()) {
        if (remaining != 0) return;
        std::vector<int> rest;
        int pos = 0, c = 0;
        for (std::size_t i = 0; i < groups.size(); ++i) {
          for (int x = 0; x < take[i]; ++x) key[pos++] = groups[i].first;
          for (int x = take[i]; x < groups[i].second; ++x) {
            rest.push_back(groups[i].first);
            c += groups[i].first;
          }
        }
        key[n_free] = c;
        add_to(out, key, cmu * arrangement_weight(rest, mult, uniform, powers));
        return;
      }
      const int hi = std::min(groups[g].second, remaining);
      for (int x = hi; x >= 0; --x) {
        if (groups[g].second - x > n0) continue;
        take[g] = x;
        rec(g + 1, remaining - x);
      }
      take[g] = 0;
    };
    rec(0, n_free);
  }
  return out;
}

}  // namespace

CoalesceComparison compare_coalesced(const MExpansion& f, const std::vector<FieldElement>& multipliers,
                                     const std::vector<FieldElement>& roots, const MExpansion& q, bool dehomogenize) {
  const int n0 = static_cast<int>(multipliers.size());
  const int n = f.n - n0;
  if (n < 0 || q.n != n) throw std::invalid_argument("compare_coalesced: variable counts do not match");
  const int F = static_cast<int>(roots.size());

  CoefMap lhs = coalesce_lhs(f, multipliers, n);

  // Π_{ρ} (w − ρ z) = Σ_x w_x w^x z^{F−x}.
  std::vector<FieldElement> w{FieldElement(1)};
  for (const auto& rho : roots) {
    std::vector<FieldElement> next(w.size() + 1, FieldElement(0));
    for (std::size_t x = 0; x < w.size(); ++x) {
      next[x + 1] += w[x];
      next[x] -= w[x] * rho;
    }
    w = std::move(next);
  }
  std::unordered_map<std::vector<int>, FieldElement, CompositionHash> qmap;
  for (const auto& [lambda, c] : q.coef) qmap.emplace(lambda.parts(), c);

  // Candidate keys of the right side: sort(λ + y) for y ∈ [0,F]^n.
  std::unordered_map<Key, bool, CompositionHash> keys;
  for (const auto& [k, v] : lhs) keys.emplace(k, true);
  std::vector<int> y(n, 0), a(n);
  for (const auto& [lambda, c] : q.coef) {
    std::fill(y.begin(), y.end(), 0);
    while (true) {
      int ysum = 0;
      for (int j = 0; j < n; ++j) {
        a[j] = lambda[j] + y[j];
        ysum += y[j];
      }
      std::sort(a.begin(), a.end(), std::greater<>());
      Key k(a);
      k.push_back(n * F - ysum);
      keys.emplace(std::move(k), true);
      int j = 0;
      while (j < n && y[j] == F) y[j++] = 0;
      if (j == n) break;
      ++y[j];
    }
  }

  // Right-side coefficient at (a, c): Σ_{x ∈ [0,F]^n, |x| = nF − c, x ≤ a} Π w_{x_j} · q_{sort(a − x)}.
  std::vector<int> x(n), diff(n);
  auto rhs_at = [&](const Key& k) {
    const int target = n * F - k[n];
    FieldElement total(0);
    std::function<void(int, int, const FieldElement&)> rec = [&](int j, int remaining, const FieldElement& weight) {
      if (j == n) {
        if (remaining) return;
        for (int i = 0; i < n; ++i) diff[i] = k[i] - x[i];
        std::sort(diff.begin(), diff.end(), std::greater<>());
        auto it = qmap.find(diff);
        if (it != qmap.end()) total += weight * it->second;
        return;
      }
      const int slots = n - j - 1;
      for (int v = 0; v <= std::min({F, k[j], remaining}); ++v) {
        if (remaining - v > slots * F) continue;
        if (w[v].is_zero()) continue;
        x[j] = v;
        rec(j + 1, remaining - v, weight * w[v]);
      }
    };
    if (target >= 0 && target <= n * F) rec(0, target, FieldElement(1));
    return total;
  };

  CoefMap left, right;
  for (const auto& [k, unused] : keys) {
    FieldElement l = FieldElement(0);
    auto it = lhs.find(k);
    if (it != lhs.end()) l = it->second;
    FieldElement r = rhs_at(k);
    Key kk = k;
    if (dehomogenize) kk.back() = 0;
    add_to(left, kk, l);
    add_to(right, kk, r);
  }

  CoalesceComparison out;
  out.residual = Poly(n + 1);
  std::vector<Poly::Term> terms;
  std::unordered_map<Key, bool, CompositionHash> all;
  for (const auto& [k, v] : left) all.emplace(k, true);
  for (const auto& [k, v] : right) all.emplace(k, true);
  for (const auto& [k, unused] : all) {
    FieldElement l(0), r(0);
    if (auto it = left.find(k); it != left.end()) l = it->second;
    if (auto it = right.find(k); it != right.end()) r = it->second;
    ++out.compared;
    FieldElement d = l - r;
    if (!d.is_zero()) terms.emplace_back(Monomial::from_exponents(k), d);
  }
  out.residual = Poly::from_terms(n + 1, std::move(terms));
  out.equal = out.residual.is_zero();
  return out;
}

}  // namespace jackclust
