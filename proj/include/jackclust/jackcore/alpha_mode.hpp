#pragma once

#include <optional>
#include <string>

#include "jackclust/exactnum/field_element.hpp"

namespace jackclust {

// Jack parameter: symbolic α (coefficients in ℚ(α)) or a fixed rational value (coefficients in ℚ).
class AlphaMode {
 public:
  static AlphaMode generic() { return AlphaMode(); }
  static AlphaMode at(const BigRational& v) {
    AlphaMode m;
    m.value_ = v;
    return m;
  }
  bool is_generic() const { return !value_.has_value(); }
  const BigRational& value() const { return *value_; }
  ParamMask field() const { return is_generic() ? mask_of(Param::alpha) : 0; }
  FieldElement alpha() const;
  // Image of an integer polynomial in α.
  FieldElement map(const ParamPoly& p) const;
  // Specializes an element of ℚ(α) to this mode (identity when generic).
  FieldElement specialize(const FieldElement& x) const;
  std::string key() const;

 private:
  std::optional<BigRational> value_;
};

}  // namespace jackclust
