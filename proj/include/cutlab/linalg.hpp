#pragma once

#include "cutlab/rational.hpp"

#include <optional>
#include <vector>

namespace cutlab {

using QMat = std::vector<QVec>;  // row-major, rows may be empty collection

int rank(QMat a);

// Unique solution of a square system, nullopt when singular.
std::optional<QVec> solve_square(QMat a, QVec b);

// Some solution of a (possibly non-square) consistent system, nullopt when
// inconsistent. Free variables are set to zero.
std::optional<QVec> solve_any(QMat a, QVec b);

// Basis of {x : a x = 0}. cols is the number of unknowns (rows of a may be fewer).
std::vector<QVec> nullspace(QMat a, int cols);

}  // namespace cutlab
