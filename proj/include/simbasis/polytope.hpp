#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "simbasis/geometry.hpp"

namespace simbasis {

// Closed halfspace { x : side * sign(plane(x)) >= 0 }.
struct Halfspace {
  Hyperplane plane;
  int side;

  bool contains(const Point& x) const { return plane.side(x) * side >= 0; }
  bool strictly_contains(const Point& x) const { return plane.side(x) * side > 0; }
};

// Facet inequalities of conv(points). The points must span their space.
std::vector<Halfspace> hull_facets(std::span<const Point> points);

// Exact hull membership by Caratheodory: p is in conv(points) iff it is a
// convex combination of some affinely independent subset. Works for
// lower-dimensional point sets too.
bool in_hull(const Point& p, std::span<const Point> points);

// Hull of a fixed point set with cached facets; the interior is empty when
// the points do not span the ambient space.
class PointHull {
 public:
  explicit PointHull(std::vector<Point> points);

  bool contains(const Point& p) const;
  bool interior_contains(const Point& p) const;
  bool full_dimensional() const { return full_dim_; }
  const std::vector<Halfspace>& facets() const { return facets_; }

 private:
  std::vector<Point> points_;
  std::vector<Halfspace> facets_;
  bool full_dim_ = false;
};

// Bounded full-dimensional convex polytope kept in both representations:
// irredundant facet halfspaces plus the vertex list, with the set of facets
// tight at each vertex.
class ConvexCell {
 public:
  struct Facet {
    std::size_t constraint;
    std::vector<std::size_t> vertices;
  };

  static ConvexCell hull_of(std::span<const Point> points);

  std::size_t dim() const { return dim_; }
  const std::vector<Halfspace>& constraints() const { return constraints_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<std::vector<std::size_t>>& tight() const { return tight_; }

  // The two closed pieces {h >= 0} and {h <= 0} when h meets the interior,
  // otherwise nullopt.
  std::optional<std::pair<ConvexCell, ConvexCell>> split(const Hyperplane& h) const;

  Point barycenter() const;
  bool closure_contains(const Point& p) const;
  // True iff p is in the cell and so is p + t d for all small t > 0.
  bool contains_initial_segment(const Point& p, const RationalVector& d) const;
  std::vector<Facet> facets() const;
  // n! times the volume, from a pulling triangulation.
  Rational scaled_volume() const;

 private:
  ConvexCell() = default;
  void prune();
  bool adjacent(std::size_t u, std::size_t w) const;

  std::size_t dim_ = 0;
  std::vector<Halfspace> constraints_;
  std::vector<Point> vertices_;
  std::vector<std::vector<std::size_t>> tight_;
};

}  // namespace simbasis
