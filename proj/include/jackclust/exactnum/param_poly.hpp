#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jackclust {

// Parameter indeterminates, in the fixed global order used for grlex and serialization.
enum class Param : int { alpha = 0, a = 1, q = 2, t = 3, p = 4 };
inline constexpr int kParamCount = 5;

// Bit i set means Param(i) is an indeterminate of the field.
using ParamMask = unsigned;

inline constexpr ParamMask mask_of(Param v) { return 1u << static_cast<int>(v); }
const char* param_name(Param v);
std::optional<Param> param_from_name(const std::string& name);
std::string mask_to_string(ParamMask m);
ParamMask mask_from_string(const std::string& text);

// Packed exponent vector: 12 bits per parameter, parameter 0 in the high bits so that
// integer comparison is lex order. Bit 11 of every field is a guard bit that must stay clear.
namespace pmono {
inline constexpr int kBits = 12;
inline constexpr int kMaxExponent = (1 << (kBits - 1)) - 1;
inline constexpr uint64_t kFieldMask = (uint64_t{1} << kBits) - 1;

constexpr int shift(int v) { return (kParamCount - 1 - v) * kBits; }
uint64_t guard_bits();
uint64_t make(Param v, int e);
inline int exponent(uint64_t m, int v) { return static_cast<int>((m >> shift(v)) & kFieldMask); }
int degree(uint64_t m);
uint64_t mul(uint64_t a, uint64_t b);
bool divides(uint64_t a, uint64_t b);  // a | b
inline uint64_t quotient(uint64_t b, uint64_t a) { return b - a; }
uint64_t gcd(uint64_t a, uint64_t b);
// grlex: total degree first, then lex.
inline bool greater(uint64_t a, uint64_t b) {
  int da = degree(a), db = degree(b);
  return da != db ? da > db : a > b;
}
}  // namespace pmono

// Sparse polynomial in ℤ[α, a, q, t, p]; terms kept in strictly descending grlex order.
class ParamPoly {
 public:
  struct Term {
    uint64_t mono;
    mpz_class coef;
  };

  ParamPoly() = default;
  ParamPoly(long c);  // NOLINT(google-explicit-constructor)
  ParamPoly(const mpz_class& c);  // NOLINT
  static ParamPoly variable(Param v, int e = 1);
  static ParamPoly monomial(uint64_t mono, mpz_class coef);
  // Takes arbitrary terms, sorts and combines them.
  static ParamPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == 0); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].mono == 0 && terms_[0].coef == 1; }
  bool is_monomial() const { return terms_.size() == 1; }
  mpz_class constant_value() const;  // requires is_constant()
  const Term& leading() const { return terms_.front(); }
  int degree_in(int v) const;
  int min_degree_in(int v) const;
  int total_degree() const;
  ParamMask support() const;
  mpz_class max_norm() const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const mpz_class& c);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b);
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  ParamPoly mul_monomial(uint64_t mono, const mpz_class& c) const;
  ParamPoly pow(unsigned e) const;

  // Exact division; nullopt when g does not divide f.
  static std::optional<ParamPoly> divide(const ParamPoly& f, const ParamPoly& g);
  // Exact division that must succeed.
  static ParamPoly divide_exact(const ParamPoly& f, const ParamPoly& g);
  ParamPoly divide_integer(const mpz_class& c) const;

  mpz_class content() const;  // nonnegative
  ParamPoly primitive() const;

  ParamPoly evaluate(int v, const mpz_class& x) const;
  // Coefficients with respect to variable v: result[d] is the coefficient of v^d.
  std::vector<ParamPoly> to_univariate(int v) const;
  static ParamPoly from_univariate(const std::vector<ParamPoly>& coeffs, int v);

  // Canonical text: "c[e...]" terms separated by spaces, exponents over the params in `field`.
  std::string serialize(ParamMask field) const;
  static ParamPoly deserialize(const std::string& text, ParamMask field);
  std::string pretty() const;

  std::size_t hash() const;

 private:
  void combine_sorted();
  std::vector<Term> terms_;
};

}  // namespace jackclust
