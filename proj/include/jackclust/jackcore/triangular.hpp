#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "jackclust/errors.hpp"
#include "jackclust/exactnum/field_element.hpp"

namespace jackclust {

// Every candidate pivot of a row vanished at the requested specialization.
class PivotCollision : public PoleError {
 public:
  explicit PivotCollision(const std::string& what) : PoleError(what) {}
};

// One unknown c_r of a triangular eigenproblem. For each operator o the equation is
//   pivots[o]·c_r + Σ_{(col, x) ∈ entries[o]} x·c_col = 0,   col < r,
// with pivots[o] = (eigenvalue of row r) − (eigenvalue of the leading row 0).
struct TriangularRow {
  std::vector<ParamPoly> pivots;
  std::vector<std::vector<std::pair<int, ParamPoly>>> entries;
};

using ParamImage = std::function<FieldElement(const ParamPoly&)>;

// Solves with c_0 = 1, picking for each row the first operator whose mapped pivot is
// nonzero. Throws PivotCollision (naming the row via describe) when none is.
std::vector<FieldElement> solve_triangular(const std::vector<TriangularRow>& rows, const ParamImage& phi,
                                           const std::function<std::string(int)>& describe);

}  // namespace jackclust
