#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "simbasis/rational.hpp"

namespace simbasis {

// Dense row-major rational matrix. Small sizes only (dimension-scale systems).
using RationalMatrix = std::vector<RationalVector>;

Rational determinant(RationalMatrix m);

std::size_t rank(RationalMatrix m);

// Basis of { x : m x = 0 } where m has `cols` columns (m may have zero rows).
std::vector<RationalVector> null_space(RationalMatrix m, std::size_t cols);

// Some solution of a x = b, or nullopt when the system is inconsistent. The
// solution is unique whenever a has full column rank.
std::optional<RationalVector> solve(RationalMatrix a, RationalVector b);

}  // namespace simbasis
