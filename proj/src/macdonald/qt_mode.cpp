#include "jackclust/macdonald/qt_mode.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace jackclust {

namespace {
const ParamMask kQT = mask_of(Param::q) | mask_of(Param::t);
const ParamMask kP = mask_of(Param::p);

FieldElement p_power(int e) {
  FieldElement p = FieldElement::indeterminate(Param::p, kP);
  return e >= 0 ? p.pow(e) : p.inverse().pow(-e);
}
}  // namespace

QtMode QtMode::power(int d, int e, int t_sign) {
  if (d <= 0) throw std::invalid_argument("QtMode: q exponent must be positive");
  if (t_sign != 1 && t_sign != -1) throw std::invalid_argument("QtMode: t sign must be +1 or -1");
  if (std::gcd(d, std::abs(e)) != 1) throw std::invalid_argument("QtMode: exponents must be coprime");
  QtMode m;
  m.generic_ = false;
  m.d_ = d;
  m.e_ = e;
  m.sign_ = t_sign;
  return m;
}

ParamMask QtMode::field() const { return generic_ ? kQT : kP; }

FieldElement QtMode::q() const {
  return generic_ ? FieldElement::indeterminate(Param::q, kQT) : p_power(d_);
}

FieldElement QtMode::t() const {
  if (generic_) return FieldElement::indeterminate(Param::t, kQT);
  return sign_ > 0 ? p_power(e_) : -p_power(e_);
}

FieldElement QtMode::map(const ParamPoly& x) const {
  if (generic_) return FieldElement::from_poly(x, kQT);
  std::map<long, mpz_class> by_exp;
  const int qv = static_cast<int>(Param::q), tv = static_cast<int>(Param::t);
  for (const auto& term : x.terms()) {
    const int a = pmono::exponent(term.mono, qv), b = pmono::exponent(term.mono, tv);
    if (pmono::degree(term.mono) != a + b) throw std::invalid_argument("QtMode::map: parameter other than q, t");
    mpz_class c = term.coef;
    if (sign_ < 0 && b % 2) c = -c;
    by_exp[static_cast<long>(d_) * a + static_cast<long>(e_) * b] += c;
  }
  if (by_exp.empty()) return FieldElement(0).with_field(kP);
  const long lo = std::min(0L, by_exp.begin()->first);
  std::vector<ParamPoly::Term> terms;
  for (const auto& [e, c] : by_exp)
    if (c != 0) terms.push_back({pmono::make(Param::p, static_cast<int>(e - lo)), c});
  ParamPoly num = ParamPoly::from_terms(terms);
  return FieldElement::fraction(num, ParamPoly::variable(Param::p, static_cast<int>(-lo)), kP);
}

FieldElement QtMode::specialize(const FieldElement& x) const {
  if (generic_) return x;
  return x.specialize({{Param::q, q()}, {Param::t, t()}});
}

QtMode QtMode::with_t_times_q() const {
  if (generic_) return *this;
  if (sign_ < 0) throw std::invalid_argument("QtMode: t -> qt is only encoded for t = +p^e");
  return power(d_, d_ + e_, 1);
}

std::string QtMode::key() const {
  if (generic_) return "q,t";
  return "q=p^" + std::to_string(d_) + ",t=" + (sign_ < 0 ? "-" : "") + "p^" + std::to_string(e_);
}

}  // namespace jackclust
