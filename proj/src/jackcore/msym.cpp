#include "jackclust/jackcore/msym.hpp"

#include <algorithm>

#include "jackclust/mpoly/special.hpp"

namespace jackclust {

Poly m_to_poly(const MExpansion& f) {
  TermAccumulator<FieldElement> acc(f.n);
  for (const auto& [mu, c] : f.coef)
    for (const auto& e : distinct_permutations(mu.parts())) acc.add(Monomial::from_exponents(e), c);
  return acc.finish();
}

MExpansion poly_to_m(const Poly& f) {
  if (!is_symmetric(f)) throw std::invalid_argument("expected a symmetric polynomial");
  MExpansion out;
  out.n = f.nvars();
  for (const auto& t : f.terms()) {
    std::vector<int> e = t.first.exponents(f.nvars());
    if (std::is_sorted(e.begin(), e.end(), std::greater<>())) out.coef.emplace(Partition(e), t.second);
  }
  return out;
}

mpz_class orbit_size(const Partition& mu) {
  mpz_class total;
  mpz_fac_ui(total.get_mpz_t(), static_cast<unsigned long>(mu.size()));
  for (int f : mu.frequencies()) {
    mpz_class d;
    mpz_fac_ui(d.get_mpz_t(), static_cast<unsigned long>(f));
    total /= d;
  }
  return total;
}

FieldElement evaluate_at_ones(const MExpansion& f) {
  FieldElement total(0);
  for (const auto& [mu, c] : f.coef) total += c * FieldElement(orbit_size(mu));
  return total;
}

MExpansion map_coefficients(const MExpansion& f, const std::function<FieldElement(const FieldElement&)>& fn) {
  MExpansion out;
  out.n = f.n;
  for (const auto& [mu, c] : f.coef) {
    FieldElement v = fn(c);
    if (!v.is_zero()) out.coef.emplace(mu, std::move(v));
  }
  return out;
}

namespace {

// Replaces one copy of the part v in μ by v + d and re-sorts.
Partition move_part(const Partition& mu, int v, int d) {
  std::vector<int> parts = mu.parts();
  auto it = std::find(parts.begin(), parts.end(), v);
  *it += d;
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int multiplicity(const Partition& mu, int v) {
  return static_cast<int>(std::count(mu.parts().begin(), mu.parts().end(), v));
}

MExpansion collect(int n, std::map<Partition, FieldElement, std::greater<>> acc) {
  MExpansion out;
  out.n = n;
  for (auto& [lambda, c] : acc)
    if (!c.is_zero()) out.coef.emplace(lambda, std::move(c));
  return out;
}

std::vector<int> distinct_parts(const Partition& mu) {
  std::vector<int> v = mu.parts();
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

MExpansion highest_weight_m(const MExpansion& f) {
  std::map<Partition, FieldElement, std::greater<>> acc;
  for (const auto& [mu, c] : f.coef)
    for (int v : distinct_parts(mu)) {
      if (v == 0) continue;
      Partition lambda = move_part(mu, v, -1);
      auto [it, inserted] = acc.try_emplace(lambda, FieldElement(0));
      it->second += c * FieldElement(v * multiplicity(lambda, v - 1));
    }
  return collect(f.n, std::move(acc));
}

MExpansion lowest_weight_m(const MExpansion& f, const FieldElement& n_phi) {
  std::map<Partition, FieldElement, std::greater<>> acc;
  for (const auto& [mu, c] : f.coef)
    for (int v : distinct_parts(mu)) {
      Partition lambda = move_part(mu, v, 1);
      auto [it, inserted] = acc.try_emplace(lambda, FieldElement(0));
      it->second += c * FieldElement(multiplicity(lambda, v + 1)) * (FieldElement(v) - n_phi);
    }
  return collect(f.n, std::move(acc));
}

}  // namespace jackclust
