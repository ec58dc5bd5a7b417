#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simbasis/basis.hpp"
#include "simbasis/chamber_complex.hpp"

namespace simbasis {

// Rank over Q by fraction-free (Bareiss) elimination on integer entries.
// Every division is checked to be exact.
std::size_t exact_rank(std::vector<std::vector<Integer>> m);
std::size_t exact_rank(const std::vector<std::vector<std::uint8_t>>& m);
std::size_t exact_rank(const IncidenceMatrix& a);

struct TriangularViolation {
  std::size_t row = 0;    // position in the certificate order
  std::size_t col = 0;
  std::size_t level = 0;  // nesting depth of the offending block, 0 = outermost
  char block = 'A';       // 'A' for the outer blocks A_ik, 'B' for the next level, ...
  bool diagonal = false;  // diagonal entry != 1 rather than a nonzero below it
};

struct TriangularCertificate {
  // Basis elements in row order; row i is paired with column i.
  std::vector<std::size_t> order;
  // block_starts[L] lists the first row of each block at nesting level L.
  std::vector<std::vector<std::size_t>> block_starts;
  std::optional<TriangularViolation> violation;

  bool ok() const { return !violation.has_value(); }
};

// Orders B and B' by depth path and checks that the submatrix is upper
// triangular with unit diagonal. A failure is reported, not thrown.
TriangularCertificate verify_triangular(const BasisPair& pair, const IncidenceMatrix& a,
                                        const SimplexSet& simplices);

struct RankReport {
  std::size_t rank_A = 0;
  std::size_t basis_size = 0;           // |B|
  std::size_t chamber_basis_size = 0;   // |B'| (distinct chambers)
  std::size_t submatrix_rank = 0;
  bool submatrix_nonsingular = false;
  std::size_t basis_rows_rank = 0;      // rank of the B rows over all chambers
  std::size_t chamber_columns_rank = 0; // rank of the B' columns over all simplices
  bool spans = false;                   // |B| = rank A and B' likewise

  bool ok() const { return spans && submatrix_nonsingular; }
};

RankReport verify_basis(const BasisPair& pair, const IncidenceMatrix& a, const SimplexSet& simplices);

}  // namespace simbasis
