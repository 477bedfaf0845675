#include "jackclust/exactnum/field_element.hpp"

#include <algorithm>

#include "jackclust/errors.hpp"
#include "jackclust/exactnum/poly_gcd.hpp"

namespace jackclust {

ParamMask combine_fields(ParamMask a, ParamMask b) {
  if (a == b || b == 0) return a;
  if (a == 0) return b;
  throw FieldMismatch("arithmetic between Q(" + mask_to_string(a) + ") and Q(" + mask_to_string(b) + ")");
}

FieldElement::FieldElement(ParamPoly num, ParamPoly den, ParamMask field, bool normalized)
    : field_(field), num_(std::move(num)), den_(std::move(den)) {
  if (!normalized) normalize();
}

FieldElement::FieldElement(const BigRational& v)
    : num_(v.numerator()), den_(v.denominator()) {}

FieldElement FieldElement::rational(long num, long den) { return FieldElement(BigRational(num, den)); }

FieldElement FieldElement::indeterminate(Param v, ParamMask field) {
  if (!(field & mask_of(v))) throw FieldMismatch(std::string("indeterminate ") + param_name(v) + " not in field");
  return FieldElement(ParamPoly::variable(v), ParamPoly(1), field, true);
}

FieldElement FieldElement::from_poly(ParamPoly num, ParamMask field) {
  if (num.support() & ~field) throw FieldMismatch("polynomial uses parameters outside its field");
  return FieldElement(std::move(num), ParamPoly(1), field, true);
}

FieldElement FieldElement::fraction(ParamPoly num, ParamPoly den, ParamMask field) {
  if (den.is_zero()) throw DivisionByZero("fraction with zero denominator");
  if ((num.support() | den.support()) & ~field) throw FieldMismatch("fraction uses parameters outside its field");
  return FieldElement(std::move(num), std::move(den), field, false);
}

void FieldElement::normalize() {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  if (num_.is_zero()) {
    den_ = ParamPoly(1);
    return;
  }
  if (!den_.is_one()) {
    ParamPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = ParamPoly::divide_exact(num_, g);
      den_ = ParamPoly::divide_exact(den_, g);
    }
  }
  if (den_.leading().coef < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

BigRational FieldElement::to_rational() const {
  if (!is_rational()) throw std::logic_error("field element is not a rational constant: " + pretty());
  return BigRational(num_.constant_value(), den_.constant_value());
}

FieldElement FieldElement::with_field(ParamMask field) const {
  if ((num_.support() | den_.support()) & ~field) throw FieldMismatch("with_field drops a used parameter");
  FieldElement r = *this;
  r.field_ = field;
  return r;
}

FieldElement FieldElement::operator-() const { return FieldElement(-num_, den_, field_, true); }

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  const ParamMask f = combine_fields(x.field_, y.field_);
  if (x.is_zero()) return y.with_field(f);
  if (y.is_zero()) return x.with_field(f);
  if (x.is_rational() && y.is_rational()) {
    FieldElement r(x.to_rational() + y.to_rational());
    r.field_ = f;
    return r;
  }
  if (x.den_.is_one() && y.den_.is_one()) return FieldElement(x.num_ + y.num_, ParamPoly(1), f, true);
  if (x.den_ == y.den_) return FieldElement(x.num_ + y.num_, x.den_, f, false);
  ParamPoly g = poly_gcd(x.den_, y.den_);
  if (g.is_one()) {
    ParamPoly n = x.num_ * y.den_ + y.num_ * x.den_;
    ParamPoly d = x.den_ * y.den_;
    if (n.is_zero()) return FieldElement(ParamPoly(), ParamPoly(1), f, true);
    if (d.leading().coef < 0) return FieldElement(-n, -d, f, true);
    return FieldElement(std::move(n), std::move(d), f, true);
  }
  ParamPoly xb = ParamPoly::divide_exact(x.den_, g);
  ParamPoly yb = ParamPoly::divide_exact(y.den_, g);
  ParamPoly t = x.num_ * yb + y.num_ * xb;
  if (t.is_zero()) return FieldElement(ParamPoly(), ParamPoly(1), f, true);
  ParamPoly g2 = poly_gcd(t, g);
  ParamPoly n = g2.is_one() ? std::move(t) : ParamPoly::divide_exact(t, g2);
  ParamPoly d = xb * (g2.is_one() ? y.den_ : ParamPoly::divide_exact(y.den_, g2));
  if (d.leading().coef < 0) return FieldElement(-n, -d, f, true);
  return FieldElement(std::move(n), std::move(d), f, true);
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) { return x + (-y); }

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  const ParamMask f = combine_fields(x.field_, y.field_);
  if (x.is_zero() || y.is_zero()) return FieldElement(ParamPoly(), ParamPoly(1), f, true);
  if (x.is_rational() && y.is_rational()) {
    FieldElement r(x.to_rational() * y.to_rational());
    r.field_ = f;
    return r;
  }
  ParamPoly g1 = x.den_.is_one() ? ParamPoly(1) : poly_gcd(y.num_, x.den_);
  ParamPoly g2 = y.den_.is_one() ? ParamPoly(1) : poly_gcd(x.num_, y.den_);
  ParamPoly xn = g2.is_one() ? x.num_ : ParamPoly::divide_exact(x.num_, g2);
  ParamPoly yn = g1.is_one() ? y.num_ : ParamPoly::divide_exact(y.num_, g1);
  ParamPoly xd = g1.is_one() ? x.den_ : ParamPoly::divide_exact(x.den_, g1);
  ParamPoly yd = g2.is_one() ? y.den_ : ParamPoly::divide_exact(y.den_, g2);
  ParamPoly n = xn * yn;
  ParamPoly d = xd * yd;
  if (d.leading().coef < 0) return FieldElement(-n, -d, f, true);
  return FieldElement(std::move(n), std::move(d), f, true);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  if (num_.leading().coef < 0) return FieldElement(-den_, -num_, field_, true);
  return FieldElement(den_, num_, field_, true);
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) {
  if (y.is_zero()) throw DivisionByZero("field division by zero");
  return x * y.inverse();
}

bool operator==(const FieldElement& x, const FieldElement& y) {
  combine_fields(x.field_, y.field_);
  return x.num_ == y.num_ && x.den_ == y.den_;
}

FieldElement FieldElement::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return FieldElement(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), field_, true);
}

std::string describe_bindings(const Bindings& bindings) {
  std::string out;
  for (const auto& [v, val] : bindings) {
    if (!out.empty()) out += ", ";
    out += std::string(param_name(v)) + " -> " + val.pretty();
  }
  return out;
}

FieldElement evaluate_param_poly(const ParamPoly& p, ParamMask source_field, const Bindings& bindings) {
  ParamMask bound = 0, target = 0;
  for (const auto& [v, val] : bindings) {
    bound |= mask_of(v);
    target = combine_fields(target, val.field());
  }
  target |= source_field & ~bound;
  if (!(p.support() & bound)) return FieldElement::from_poly(p, target);

  struct Table {
    int var;
    int maxdeg;
    std::vector<ParamPoly> npow, dpow;
  };
  std::vector<Table> tables;
  for (const auto& [v, val] : bindings) {
    int vi = static_cast<int>(v);
    int dmax = p.degree_in(vi);
    if (dmax == 0) continue;
    Table t{vi, dmax, {ParamPoly(1)}, {ParamPoly(1)}};
    for (int i = 1; i <= dmax; ++i) {
      t.npow.push_back(t.npow.back() * val.num());
      t.dpow.push_back(t.dpow.back() * val.den());
    }
    tables.push_back(std::move(t));
  }
  uint64_t bound_fields = 0;
  for (const auto& t : tables) bound_fields |= pmono::kFieldMask << pmono::shift(t.var);

  std::vector<ParamPoly::Term> acc;
  for (const auto& term : p.terms()) {
    ParamPoly prod = ParamPoly::monomial(term.mono & ~bound_fields, term.coef);
    for (const auto& t : tables) {
      int e = pmono::exponent(term.mono, t.var);
      prod *= t.npow[e];
      if (t.maxdeg - e > 0) prod *= t.dpow[t.maxdeg - e];
    }
    for (const auto& x : prod.terms()) acc.push_back(x);
  }
  ParamPoly num = ParamPoly::from_terms(std::move(acc));
  ParamPoly den(1);
  for (const auto& t : tables) den *= t.dpow[t.maxdeg];
  return FieldElement::fraction(std::move(num), std::move(den), target);
}

FieldElement FieldElement::specialize(const Bindings& bindings) const {
  FieldElement d = evaluate_param_poly(den_, field_, bindings);
  if (d.is_zero()) throw PoleError("denominator " + den_.pretty() + " vanishes under " + describe_bindings(bindings));
  FieldElement n = evaluate_param_poly(num_, field_, bindings);
  ParamMask target = combine_fields(n.field(), d.field());
  FieldElement r = n / d;
  r.field_ = target;
  return r;
}

std::string FieldElement::serialize() const {
  return "{" + num_.serialize(field_) + "}/{" + den_.serialize(field_) + "}";
}

FieldElement FieldElement::deserialize(const std::string& text, ParamMask field) {
  auto mid = text.find("}/{");
  if (text.size() < 7 || text.front() != '{' || text.back() != '}' || mid == std::string::npos)
    throw ParseError("bad field element: " + text);
  ParamPoly n = ParamPoly::deserialize(text.substr(1, mid - 1), field);
  ParamPoly d = ParamPoly::deserialize(text.substr(mid + 3, text.size() - mid - 4), field);
  if (d.is_zero()) throw ParseError("zero denominator in: " + text);
  FieldElement r = fraction(n, d, field);
  if (r.num_ != n || r.den_ != d) throw ParseError("field element not in canonical form: " + text);
  return r;
}

std::string FieldElement::pretty() const {
  if (den_.is_one()) return num_.pretty();
  auto wrap = [](const ParamPoly& p) {
    std::string s = p.pretty();
    return p.size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace jackclust
