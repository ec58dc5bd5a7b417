#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "simbasis/rational.hpp"

namespace simbasis {

// 1-based point label inside a configuration.
using Label = int;

struct Point {
  RationalVector coords;

  Point() = default;
  explicit Point(RationalVector c) : coords(std::move(c)) {}
  Point(std::initializer_list<Rational> c) : coords(c) {}

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
  // Lexicographic on coordinates.
  friend bool operator<(const Point& a, const Point& b);
};

std::ostream& operator<<(std::ostream& os, const Point& p);

RationalVector operator-(const Point& a, const Point& b);
Point operator+(const Point& a, const RationalVector& d);
Point lerp(const Point& a, const Point& b, const Rational& t);
Point centroid(std::span<const Point> points);

// side(x) = sign(normal . x - offset). Always stored canonically: integer
// entries with gcd 1 and the first nonzero normal entry positive, so equal
// hyperplanes compare equal.
class Hyperplane {
 public:
  Hyperplane(RationalVector normal, Rational offset);

  const RationalVector& normal() const { return normal_; }
  const Rational& offset() const { return offset_; }
  std::size_t dim() const { return normal_.size(); }

  Rational evaluate(const Point& x) const { return dot(normal_, x.coords) - offset_; }
  int side(const Point& x) const { return sgn(evaluate(x)); }

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
    return a.offset_ == b.offset_ && a.normal_ == b.normal_;
  }
  friend bool operator<(const Hyperplane& a, const Hyperplane& b);

 private:
  RationalVector normal_;
  Rational offset_;
};

std::ostream& operator<<(std::ostream& os, const Hyperplane& h);

// Sorted list of n+1 distinct labels.
struct Simplex {
  std::vector<Label> vertices;

  Simplex() = default;
  explicit Simplex(std::vector<Label> labels);
  Simplex(std::initializer_list<Label> labels) : Simplex(std::vector<Label>(labels)) {}

  bool contains(Label l) const;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

std::string to_string(const Simplex& s);
std::ostream& operator<<(std::ostream& os, const Simplex& s);

enum class Containment { interior, boundary, outside };

std::string to_string(Containment c);

// Sign of det[p_1 - p_0, ..., p_n - p_0]; 0 iff affinely dependent.
// Throws InputError on a count or dimension mismatch.
int orientation(std::span<const Point> points);

// Dimension of the affine hull (-1 for the empty list).
int affine_rank(std::span<const Point> points);

// Barycentric classification of p against the simplex spanned by `vertices`
// (n+1 affinely independent points).
Containment classify_in_simplex(const Point& p, std::span<const Point> vertices);

// `table` is label-indexed: label l is table[l - 1].
Containment point_vs_simplex(const Point& p, const Simplex& s, std::span<const Point> table);

// Intersection of the closed segment [a, b] with h. Throws DegenerateInput when
// both endpoints lie on h.
std::optional<Point> segment_hyperplane_intersection(const Point& a, const Point& b,
                                                     const Hyperplane& h);

// Canonical hyperplane through n points in n-space, or nullopt when they are
// affinely dependent.
std::optional<Hyperplane> affine_hull_hyperplane(std::span<const Point> points);

// Precomputed inward facet hyperplanes of a full-dimensional simplex. Gives
// the same classification as classify_in_simplex at a fraction of the cost.
class SimplexRegion {
 public:
  explicit SimplexRegion(std::span<const Point> vertices);
  Containment classify(const Point& p) const;

 private:
  std::vector<Hyperplane> facets_;
  std::vector<int> inward_;
};

std::vector<Point> gather(const Simplex& s, std::span<const Point> table);

}  // namespace simbasis
