#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "simbasis/configuration.hpp"

namespace simbasis {

// The points later than the apex e_k, seen from e_k and intersected with the
// separating hyperplane H_k, written in an (n-1)-dimensional frame of H_k.
struct ProjectedConfiguration {
  std::size_t step = 0;                 // k
  Label apex = 0;                       // e_k
  Hyperplane hyperplane;                // H_k
  std::size_t dropped_axis = 0;         // frame: all coordinates except this one
  std::vector<Point> ambient;           // projected points in ambient coordinates
  Configuration points;                 // projected points in frame coordinates
  ShellingOrder order;                  // shelling of the projected points
  std::vector<Label> ray_nearest;       // projected label -> nearest original point
  std::map<Label, Label> projected_of;  // later original label -> projected label

  Label nearest(Label projected) const { return ray_nearest.at(static_cast<std::size_t>(projected - 1)); }
  Point to_frame(const Point& ambient_point) const;
};

// Requires 1 <= k <= N - 1 (the basis builder uses k <= N - n).
ProjectedConfiguration project_step(const Configuration& config, const ShellingOrder& order,
                                    std::size_t k);

// Lifts a simplex of the projected configuration to the n-simplex on the apex
// and the nearest original points on the corresponding rays.
Simplex mu_lift(const Simplex& projected, const ProjectedConfiguration& pc);

struct ProjectedRegion {
  enum class Kind { piece, suffix_hull };  // S^k_j or P^k_j
  Kind kind;
  std::size_t j;
};

// Whether p lies on a ray from the apex through a point of the region.
// Throws InputError when p is the apex.
bool cone_contains(const Point& p, const ProjectedRegion& region, const ProjectedConfiguration& pc,
                   const Configuration& config);

}  // namespace simbasis
