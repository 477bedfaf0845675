#include "jackclust/partlib/kappa.hpp"

#include <numeric>
#include <stdexcept>

namespace jackclust {

KappaSpec build_kappa(int k, int r, int s, int m, int b) {
  if (k < 1 || r < 2 || s < 1 || b < 0) throw std::invalid_argument("build_kappa: need k ≥ 1, r ≥ 2, s ≥ 1, b ≥ 0");
  if (std::gcd(k + 1, r - 1) != 1) throw std::invalid_argument("build_kappa: k+1 and r−1 must be coprime");
  if (m < 1 || m > k) throw std::invalid_argument("build_kappa: need 1 ≤ m ≤ k");
  const int n0 = (k + 1) * s - 1;
  std::vector<int> freqs{n0};
  freqs.insert(freqs.end(), (r - 1) * s, 0);
  for (int block = 0; block < b; ++block) {
    freqs.push_back(k);
    freqs.insert(freqs.end(), r - 1, 0);
  }
  freqs.push_back(m);
  KappaSpec spec;
  spec.kappa = Partition::from_frequencies(freqs);
  spec.n = spec.kappa.size();
  spec.n0 = n0;
  spec.alpha = BigRational(-(k + 1), r - 1);
  if (spec.n != n0 + b * k + m || spec.n - spec.kappa.length() != n0)
    throw std::logic_error("build_kappa: frequency expansion inconsistent");
  if (!satisfies_exclusion(spec.kappa, k, r)) throw std::logic_error("build_kappa: exclusion condition violated");
  return spec;
}

Partition reduced_kappa(const Partition& kappa) {
  const int len = kappa.length();
  std::vector<int> parts(kappa.parts().begin(), kappa.parts().begin() + len);
  if (len) {
    const int low = parts.back();
    for (auto& x : parts) x -= low;
  }
  return Partition(std::move(parts));
}

KappaSpec rectangular_kappa(int r, int g, int n) {
  if (r < 2 || g < 1 || n < 2 * g) throw std::invalid_argument("rectangular_kappa: need r ≥ 2, g ≥ 1, N ≥ 2g");
  if (std::gcd(n + 1 - g, r - 1) != 1) throw std::invalid_argument("rectangular_kappa: N+1−g and r−1 must be coprime");
  KappaSpec spec;
  spec.kappa = Partition::padded(std::vector<int>(g, r), n);
  spec.n = n;
  spec.n0 = n - g;
  spec.alpha = BigRational(-(n + 1 - g), r - 1);
  return spec;
}

bool satisfies_exclusion(const Partition& kappa, int k, int r) {
  const int len = kappa.length();
  for (int i = 0; i + k < len; ++i)
    if (kappa[i] - kappa[i + k] < r) return false;
  return true;
}

}  // namespace jackclust
