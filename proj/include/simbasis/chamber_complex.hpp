#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "simbasis/configuration.hpp"
#include "simbasis/polytope.hpp"

namespace simbasis {

// All full-dimensional simplices over E, lexicographic on sorted labels.
struct SimplexSet {
  std::vector<Simplex> simplices;

  std::size_t size() const { return simplices.size(); }
  // Row index of s, or SIZE_MAX when s is not in the set.
  std::size_t index_of(const Simplex& s) const;
};

struct Chamber {
  std::size_t id = 0;
  std::vector<ConvexCell> cells;
  Point representative;  // barycenter of the lexicographically first cell
};

struct ChamberEnumeration {
  std::vector<Chamber> chambers;
  std::size_t cell_count = 0;
  std::size_t merge_count = 0;  // uncovered shared facets that joined two cells
  Rational cells_volume;        // n! * total volume of all cells
  Rational hull_volume;         // n! * volume of P
};

class IncidenceMatrix {
 public:
  IncidenceMatrix() = default;
  IncidenceMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), bits_(rows, std::vector<std::uint8_t>(cols, 0)) {}

  std::size_t rows() const { return bits_.size(); }
  std::size_t cols() const { return cols_; }
  std::uint8_t at(std::size_t r, std::size_t c) const { return bits_[r][c]; }
  void set(std::size_t r, std::size_t c, std::uint8_t v) { bits_[r][c] = v; }
  const std::vector<std::uint8_t>& row(std::size_t r) const { return bits_[r]; }
  std::string row_string(std::size_t r) const;

 private:
  std::size_t cols_ = 0;
  std::vector<std::vector<std::uint8_t>> bits_;
};

SimplexSet enumerate_simplices(const Configuration& config);

// Canonical, deduplicated affine hulls of all independent n-subsets of E.
std::vector<Hyperplane> wall_hyperplanes(const Configuration& config);

// Open arrangement cells of P cut by every wall, merged across shared facets
// not covered by an (n-1)-simplex of E. Chambers are ordered by
// representative; ids are positions in that order. Requires a spanning
// configuration (any n >= 1).
ChamberEnumeration enumerate_chambers(const Configuration& config);

// Entry (s, c) = 1 iff the representative of c is interior to s. Throws
// InternalError if a representative lies on a simplex boundary.
IncidenceMatrix incidence_matrix(const SimplexSet& simplices, const std::vector<Chamber>& chambers,
                                 const Configuration& config);

// Chamber-membership vector of an arbitrary simplex over E.
std::vector<std::uint8_t> chamber_vector(const Simplex& s, const std::vector<Chamber>& chambers,
                                         const Configuration& config);

// True when the chamber equals the convex hull of its cell vertices.
bool is_convex(const Chamber& chamber);

// Everything the downstream modules need, computed once.
struct ChamberComplex {
  Configuration config;
  SimplexSet simplices;
  std::vector<Hyperplane> walls;
  ChamberEnumeration enumeration;
  IncidenceMatrix matrix;

  explicit ChamberComplex(Configuration c);
  const std::vector<Chamber>& chambers() const { return enumeration.chambers; }
  // Row of A for s (computed directly when s is not a row, e.g. flat terms
  // give all zeros).
  std::vector<std::uint8_t> row_of(const Simplex& s) const;
};

}  // namespace simbasis
