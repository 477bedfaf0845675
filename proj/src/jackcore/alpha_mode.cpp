#include "jackclust/jackcore/alpha_mode.hpp"

namespace jackclust {

FieldElement AlphaMode::alpha() const {
  return is_generic() ? FieldElement::indeterminate(Param::alpha, field()) : FieldElement(*value_);
}

FieldElement AlphaMode::map(const ParamPoly& p) const {
  if (is_generic()) return FieldElement::from_poly(p, field());
  if (p.is_constant()) return FieldElement(p.constant_value());
  BigRational total(0);
  for (const auto& t : p.terms()) total = total + BigRational(t.coef) * value_->pow(pmono::exponent(t.mono, 0));
  return FieldElement(total);
}

FieldElement AlphaMode::specialize(const FieldElement& x) const {
  if (is_generic()) return x;
  return x.specialize({{Param::alpha, FieldElement(*value_)}});
}

std::string AlphaMode::key() const { return is_generic() ? "alpha" : value_->to_string(); }

}  // namespace jackclust
