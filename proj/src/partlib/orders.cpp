#include "jackclust/partlib/orders.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace jackclust {

namespace {

void check_modulus(int a, int b) {
  if (a != b) throw std::invalid_argument("order comparison needs equal moduli");
}

}  // namespace

bool dominance_less(const Partition& mu, const Partition& kappa) {
  check_modulus(mu.modulus(), kappa.modulus());
  if (mu == kappa) return false;
  const int n = std::max(mu.size(), kappa.size());
  int sm = 0, sk = 0;
  for (int i = 0; i < n; ++i) {
    sm += i < mu.size() ? mu[i] : 0;
    sk += i < kappa.size() ? kappa[i] : 0;
    if (sm > sk) return false;
  }
  return true;
}

bool bruhat_less(const Composition& nu, const Composition& eta) {
  check_modulus(modulus(nu), modulus(eta));
  if (nu.size() != eta.size()) throw std::invalid_argument("bruhat_less needs equal lengths");
  Partition np = sorted_partition(nu), ep = sorted_partition(eta);
  if (np != ep) return dominance_less(np, ep);
  if (nu == eta) return false;
  const int top = ep.size() ? ep[0] : 0;
  for (int v = 1; v <= top; ++v) {
    int cn = 0, ce = 0;
    for (std::size_t p = 0; p < nu.size(); ++p) {
      cn += nu[p] >= v;
      ce += eta[p] >= v;
      if (cn > ce) return false;
    }
  }
  return true;
}

int inversions(const Composition& c) {
  int inv = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) inv += c[i] > c[j];
  return inv;
}

std::vector<Partition> partitions_below(const Partition& kappa) {
  const int n = kappa.size();
  std::vector<int> prefix(n + 1, 0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + kappa[i];
  const int total = prefix[n];
  std::vector<Partition> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int, int)> rec = [&](int i, int sum, int cap) {
    if (i == n) {
      if (sum == total) out.emplace_back(cur);
      return;
    }
    int remaining = total - sum;
    int hi = std::min({cap, remaining, prefix[i + 1] - sum});
    for (int x = hi; x >= 0; --x) {
      if (x * (n - i) < remaining) break;
      cur[i] = x;
      rec(i + 1, sum + x, x);
    }
    cur[i] = 0;
  };
  rec(0, 0, total);
  return out;
}

std::vector<Composition> rearrangements(const Partition& mu) {
  Composition c(mu.parts());
  std::sort(c.begin(), c.end());
  std::vector<Composition> out;
  do {
    out.push_back(c);
  } while (std::next_permutation(c.begin(), c.end()));
  std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
    int ia = inversions(a), ib = inversions(b);
    return ia != ib ? ia > ib : a > b;
  });
  return out;
}

std::vector<Composition> compositions_below(const Composition& eta) {
  Partition top = sorted_partition(eta);
  std::vector<Composition> out;
  for (const auto& mu : partitions_below(top)) {
    for (auto& nu : rearrangements(mu))
      if (mu != top || nu == eta || bruhat_less(nu, eta)) out.push_back(std::move(nu));
  }
  return out;
}

Composition increasing_arrangement(const Partition& kappa) {
  Composition c(kappa.parts());
  std::reverse(c.begin(), c.end());
  return c;
}

}  // namespace jackclust
