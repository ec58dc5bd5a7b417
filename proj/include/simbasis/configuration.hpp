#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "simbasis/geometry.hpp"
#include "simbasis/polytope.hpp"

namespace simbasis {

// The labeled point set E. Labels run 1..N in insertion order.
class Configuration {
 public:
  // Validates the user-facing invariants: n >= 2, N > n, pairwise distinct
  // points, and some n+1 points affinely independent. Throws InputError.
  Configuration(std::size_t dim, std::vector<Point> points);

  // Skips the spanning and size checks. Used for the projected point sets
  // inside the recursion, which may be tiny or lower-dimensional; points must
  // still be distinct and of the stated dimension.
  static Configuration relaxed(std::size_t dim, std::vector<Point> points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& at(Label l) const { return points_.at(static_cast<std::size_t>(l - 1)); }
  bool has_label(Label l) const { return l >= 1 && static_cast<std::size_t>(l) <= points_.size(); }
  std::vector<Point> vertices(const Simplex& s) const { return gather(s, points_); }
  bool spans() const;
  bool is_simplex(const Simplex& s) const;

 private:
  Configuration() = default;
  void check_points() const;

  std::size_t dim_ = 0;
  std::vector<Point> points_;
};

struct ShellingOrder {
  std::vector<Label> permutation;   // permutation[i] is the (i+1)-th point
  RationalVector functional;        // the generic direction l
  RationalVector thresholds;        // H_k = { x : l.x = thresholds[k-1] }, k = 1..N-1

  std::size_t position(Label l) const;  // 1-based
  Label at(std::size_t k) const { return permutation.at(k - 1); }
  Hyperplane separator(std::size_t k) const;
};

// First l = (1, M, ..., M^(n-1)), M = 1, 2, ..., with pairwise distinct values
// on the configuration.
RationalVector choose_generic_direction(const Configuration& config);

bool is_generic_direction(const Configuration& config, const RationalVector& direction);

ShellingOrder shelling_order(const Configuration& config);
// Throws InputError if the direction is not generic.
ShellingOrder shelling_order(const Configuration& config, const RationalVector& direction);

// Membership in the pieces S_k = closure(P_{k-1} \ P_k) of the shelling
// decomposition, with P_j = conv of the last N - j points.
class ShellingRegions {
 public:
  ShellingRegions(const Configuration& config, const ShellingOrder& order);

  std::size_t step_count() const { return steps_; }  // N - n
  // Smallest k with p in P_{k-1} and p not in int(P_k); nullopt outside P.
  std::optional<std::size_t> region_index(const Point& p) const;
  // p in int(P_{k-1}) and p not in P_k.
  bool in_open_region(const Point& p, std::size_t k) const;
  const PointHull& suffix_hull(std::size_t j) const { return hulls_.at(j); }

 private:
  std::size_t steps_ = 0;
  std::vector<PointHull> hulls_;  // hulls_[j] = P_j, j = 0..N-n
};

std::optional<std::size_t> region_index(const Point& p, const ShellingOrder& order,
                                        const Configuration& config);

}  // namespace simbasis
