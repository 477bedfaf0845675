#pragma once

#include <string>

#include "jackclust/exactnum/big_rational.hpp"
#include "jackclust/exactnum/field_element.hpp"
#include "jackclust/mpoly/mpoly.hpp"

namespace jackclust {

using Poly = MPoly<FieldElement>;
using RingPoly = MPoly<ParamPoly>;
using RatPoly = MPoly<BigRational>;

// Union of the coefficient fields (must be compatible).
ParamMask field_of(const Poly& f);

// Canonical text form:
//   mpoly nvars=<N> field=<names|Q>
//   [e_1,...,e_N] {num}/{den}      (one line per term, grlex descending)
//   end <number of terms>
std::string serialize(const Poly& f);
Poly deserialize_poly(const std::string& text);

// Human-readable rendering, e.g. "z1^2 + (2/(alpha + 1))*z1*z2".
std::string pretty(const Poly& f);

Poly to_field_poly(const RatPoly& f);
Poly ring_to_field(const RingPoly& f, ParamMask field);
// Applies parameter bindings to every coefficient.
Poly specialize_poly(const Poly& f, const Bindings& bindings);

}  // namespace jackclust
