#pragma once

#include <cstddef>
#include <vector>

#include "coisored/arith/polynomial.hpp"

namespace coisored {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t ncols);

/// Basis of {x : m x = 0}, returned in reduced echelon form (as rows).
RationalMatrix nullspace(const RationalMatrix& m, std::size_t ncols);

}  // namespace coisored
