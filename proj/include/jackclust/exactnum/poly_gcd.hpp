#pragma once

#include <optional>

#include "jackclust/exactnum/param_poly.hpp"

namespace jackclust {

// Greatest common divisor in ℤ[α, a, q, t, p], normalized to a positive leading coefficient.
// Tries the heuristic evaluation/interpolation method first and falls back to a
// recursive primitive PRS when it gives up.
ParamPoly poly_gcd(const ParamPoly& f, const ParamPoly& g);

// The two methods separately, for cross-checking.
std::optional<ParamPoly> poly_gcd_heuristic(const ParamPoly& f, const ParamPoly& g);
ParamPoly poly_gcd_prs(const ParamPoly& f, const ParamPoly& g);

// Sign-normalizes p so that its grlex leading coefficient is positive.
ParamPoly normalize_sign(ParamPoly p);

}  // namespace jackclust
