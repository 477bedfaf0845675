#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

namespace jackclust {

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxVarExponent = 255;

// Exponent vector in at most kMaxVars variables with cached total degree.
class Monomial {
 public:
  Monomial() { e_.fill(0); }
  static Monomial from_exponents(const std::vector<int>& exps);

  int operator[](int i) const { return e_[i]; }
  int degree() const { return deg_; }
  void set(int i, int value);
  std::vector<int> exponents(int nvars) const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;  // this | o
  Monomial quotient_of(const Monomial& o) const;  // o / this, assumes divides(o)

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg_ == b.deg_ && std::memcmp(a.e_.data(), b.e_.data(), kMaxVars) == 0;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  // Graded lexicographic order with z_1 > z_2 > ...
  friend bool grlex_greater(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ > b.deg_;
    return std::memcmp(a.e_.data(), b.e_.data(), kMaxVars) > 0;
  }

  std::size_t hash() const;
  std::string to_string(int nvars) const;

 private:
  std::array<uint8_t, kMaxVars> e_;
  uint16_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

}  // namespace jackclust
