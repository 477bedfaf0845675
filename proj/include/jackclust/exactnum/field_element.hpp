#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jackclust/exactnum/big_rational.hpp"
#include "jackclust/exactnum/param_poly.hpp"

namespace jackclust {

class FieldElement;

// Parameter values for specialize(); values may live in another field (e.g. q ↦ p²).
using Bindings = std::vector<std::pair<Param, FieldElement>>;

// Element of ℚ(params) in reduced form num/den with a positive grlex leading coefficient
// in the denominator. The field is the mask of declared indeterminates; mask 0 is ℚ and
// combines with any field.
class FieldElement {
 public:
  FieldElement() : den_(1) {}
  FieldElement(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  FieldElement(const mpz_class& v) : num_(v), den_(1) {}  // NOLINT
  FieldElement(const BigRational& v);  // NOLINT
  static FieldElement rational(long num, long den);
  static FieldElement indeterminate(Param v, ParamMask field);
  static FieldElement from_poly(ParamPoly num, ParamMask field);
  static FieldElement fraction(ParamPoly num, ParamPoly den, ParamMask field);

  ParamMask field() const { return field_; }
  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  BigRational to_rational() const;
  FieldElement with_field(ParamMask field) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }
  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
  friend bool operator==(const FieldElement& x, const FieldElement& y);
  friend bool operator!=(const FieldElement& x, const FieldElement& y) { return !(x == y); }

  FieldElement inverse() const;
  FieldElement pow(int e) const;

  // Substitutes parameter values and renormalizes; PoleError if the denominator vanishes.
  FieldElement specialize(const Bindings& bindings) const;

  std::string serialize() const;  // "{num}/{den}" over field()
  static FieldElement deserialize(const std::string& text, ParamMask field);
  std::string pretty() const;

 private:
  FieldElement(ParamPoly num, ParamPoly den, ParamMask field, bool normalized);
  void normalize();
  ParamMask field_ = 0;
  ParamPoly num_;
  ParamPoly den_;
};

ParamMask combine_fields(ParamMask a, ParamMask b);

// Evaluates a parameter polynomial under bindings; unbound parameters stay symbolic.
FieldElement evaluate_param_poly(const ParamPoly& p, ParamMask source_field, const Bindings& bindings);

std::string describe_bindings(const Bindings& bindings);

}  // namespace jackclust
