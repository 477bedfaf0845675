#pragma once

#include <string>

#include "jackclust/exactnum/field_element.hpp"

namespace jackclust {

// Macdonald parameters: symbolic (coefficients in ℚ(q,t)) or the p-encoding
// q = p^d, t = ±p^e with d > 0 and gcd(d, |e|) = 1 (coefficients in ℚ(p)).
class QtMode {
 public:
  static QtMode generic() { return QtMode(); }
  static QtMode power(int d, int e, int t_sign = 1);
  bool is_generic() const { return generic_; }
  int q_exponent() const { return d_; }
  int t_exponent() const { return e_; }
  int t_sign() const { return sign_; }
  ParamMask field() const;
  FieldElement q() const;
  FieldElement t() const;
  // Image of an integer polynomial in q, t.
  FieldElement map(const ParamPoly& x) const;
  // Specializes an element of ℚ(q,t) to this mode (identity when generic).
  FieldElement specialize(const FieldElement& x) const;
  // The mode with t replaced by q·t.
  QtMode with_t_times_q() const;
  std::string key() const;

 private:
  bool generic_ = true;
  int d_ = 0, e_ = 0, sign_ = 1;
};

}  // namespace jackclust
