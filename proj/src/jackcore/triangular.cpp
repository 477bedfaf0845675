#include "jackclust/jackcore/triangular.hpp"

namespace jackclust {

std::vector<FieldElement> solve_triangular(const std::vector<TriangularRow>& rows, const ParamImage& phi,
                                           const std::function<std::string(int)>& describe) {
  std::vector<FieldElement> c(rows.size());
  if (rows.empty()) return c;
  c[0] = FieldElement(1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    int chosen = -1;
    FieldElement pivot;
    for (std::size_t o = 0; o < row.pivots.size(); ++o) {
      if (row.pivots[o].is_zero()) continue;
      pivot = phi(row.pivots[o]);
      if (!pivot.is_zero()) {
        chosen = static_cast<int>(o);
        break;
      }
    }
    if (chosen < 0) {
      bool generic_zero = true;
      for (const auto& p : row.pivots) generic_zero = generic_zero && p.is_zero();
      if (generic_zero) throw std::logic_error("triangular solve: eigenvalues coincide identically for " + describe(int(r)));
      throw PivotCollision("pivot vanishes at the specialization: " + describe(int(r)));
    }
    FieldElement sum(0);
    for (const auto& [col, x] : row.entries[chosen])
      if (!c[col].is_zero()) sum += phi(x) * c[col];
    c[r] = -sum / pivot;
  }
  return c;
}

}  // namespace jackclust
