#include "jackclust/mpoly/monomial.hpp"

#include <stdexcept>

namespace jackclust {

Monomial Monomial::from_exponents(const std::vector<int>& exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars)) throw std::out_of_range("too many variables");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i), exps[i]);
  return m;
}

void Monomial::set(int i, int value) {
  if (i < 0 || i >= kMaxVars) throw std::out_of_range("variable index out of range");
  if (value < 0 || value > kMaxVarExponent) throw std::overflow_error("monomial exponent out of range");
  deg_ = static_cast<uint16_t>(deg_ - e_[i] + value);
  e_[i] = static_cast<uint8_t>(value);
}

std::vector<int> Monomial::exponents(int nvars) const {
  std::vector<int> out(nvars);
  for (int i = 0; i < nvars; ++i) out[i] = e_[i];
  return out;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int s = e_[i] + o.e_[i];
    if (s > kMaxVarExponent) throw std::overflow_error("monomial exponent overflow");
    r.e_[i] = static_cast<uint8_t>(s);
  }
  r.deg_ = static_cast<uint16_t>(deg_ + o.deg_);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<uint8_t>(o.e_[i] - e_[i]);
  r.deg_ = static_cast<uint16_t>(o.deg_ - deg_);
  return r;
}

std::size_t Monomial::hash() const {
  uint64_t a, b;
  std::memcpy(&a, e_.data(), 8);
  std::memcpy(&b, e_.data() + 8, 8);
  uint64_t h = a * 0x9E3779B97F4A7C15ull ^ (b + 0x632BE59BD9B4E019ull + (a << 6) + (a >> 2));
  h ^= h >> 29;
  return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ull);
}

std::string Monomial::to_string(int nvars) const {
  std::string out = "[";
  for (int i = 0; i < nvars; ++i) {
    if (i) out += ',';
    out += std::to_string(e_[i]);
  }
  return out + "]";
}

}  // namespace jackclust
