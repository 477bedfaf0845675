#pragma once

#include <optional>
#include <string>

#include "jackclust/jackcore/msym.hpp"
#include "jackclust/macdonald/hecke.hpp"
#include "jackclust/macdonald/qt_mode.hpp"
#include "jackclust/partlib/partition.hpp"

namespace jackclust {

// E_η(z;q,t) = z^η + lower terms, the joint eigenfunction of the Y_i. Solved against the
// integral operators t^{N−1}Y_i; every eigen equation is rechecked on the result.
Poly macdonald_nonsymmetric(const Composition& eta, const QtMode& mode);

// P_κ(z;q,t) from the M_1 eigenvalue equation, solved in the m_μ basis.
MExpansion macdonald_symmetric_m(const Partition& kappa, const QtMode& mode);
Poly macdonald_symmetric(const Partition& kappa, const QtMode& mode);

struct Proportional {
  Poly poly;
  FieldElement constant;  // poly = constant · (normalized polynomial)
};
// U⁺E_η and the constant a_η with U⁺E_η = a_η P_{η⁺}.
Proportional macdonald_symmetrized(const Composition& eta, const QtMode& mode);

// S_{δ+κ}(z;q,t) = t^{−N(N−1)/2} Δ_t(z) P_κ(z;q,qt).
Poly macdonald_antisymmetric(const Partition& kappa, const QtMode& mode);
// U⁻E_ρ for a composition ρ with distinct parts, and b with U⁻E_ρ = b S_{ρ⁺}.
Proportional macdonald_antisymmetrized(const Composition& rho, const QtMode& mode);

// lim_{q→1} f(q, q^{1/α}), coefficientwise. PoleError names the offending coefficient.
FieldElement jack_limit(const FieldElement& x);
Poly jack_limit(const Poly& f);

// Substitutions z_j = t q^s z_i for all ordered pairs i ≠ j and 0 ≤ s ≤ s_max.
// With ordered_at_zero set, s = 0 is only used for j < i.
struct WheelSpec {
  int s_max = 0;
  bool ordered_at_zero = false;
};
struct WheelResult {
  bool vanishes = true;
  int i = -1, j = -1, s = -1;  // first failing substitution (0-based)
  std::optional<Poly> residual;
  std::string describe() const;
};
WheelResult wheel_check(const Poly& f, const QtMode& mode, const WheelSpec& spec);

}  // namespace jackclust
