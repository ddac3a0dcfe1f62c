#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

// One linear equation sum_j row[j] * x_j = rhs over the rationals.
using SparseRow = std::map<int, Rational>;

// Basis of the solution space of the homogeneous system, one vector per free
// column of the reduced row echelon form (free entry 1).
std::vector<std::vector<Rational>> nullspace(const std::vector<SparseRow>& rows, int ncols);

// A solution of rows * x = rhs (free variables 0), or nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_linear(const std::vector<SparseRow>& rows,
                                                  const std::vector<Rational>& rhs, int ncols);

}  // namespace hecke
