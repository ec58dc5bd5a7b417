#include "simbasis/basis.hpp"

#include <algorithm>

#include "simbasis/errors.hpp"

namespace simbasis {

std::set<Simplex> BasisLevel::simplex_set() const {
  std::set<Simplex> out;
  for (const auto& e : elements) out.insert(e.simplex);
  return out;
}

std::set<Simplex> BasisPair::simplex_set() const {
  std::set<Simplex> out;
  for (const auto& e : elements) out.insert(e.simplex);
  return out;
}

namespace {

Rational cross(const RationalVector& a, const RationalVector& b) { return a[0] * b[1] - a[1] * b[0]; }

struct Ray {
  RationalVector direction;
  Label nearest;
  Rational reach;  // l . (nearest - apex); smaller is nearer along the ray
};

}  // namespace

std::vector<LevelElement> build_basis_2d(const Configuration& config, const ShellingOrder& order) {
  if (config.dim() != 2) throw InputError("build_basis_2d needs a planar configuration");
  std::vector<LevelElement> out;
  const std::size_t count = config.size();
  for (std::size_t k = 1; k + 2 <= count; ++k) {
    const Label apex = order.at(k);
    const Point& origin = config.at(apex);
    std::vector<Ray> rays;
    for (std::size_t i = k + 1; i <= count; ++i) {
      const Label label = order.at(i);
      auto d = config.at(label) - origin;
      const Rational reach = dot(order.functional, d);
      if (reach <= 0) throw InternalError("later point not beyond the separating line");
      auto same = std::find_if(rays.begin(), rays.end(),
                               [&](const Ray& r) { return cross(r.direction, d) == 0; });
      if (same == rays.end()) {
        rays.push_back({std::move(d), label, reach});
      } else if (reach < same->reach) {
        same->nearest = label;
        same->reach = reach;
      }
    }
    // All rays lie in one open half-plane, where the cross product is a
    // strict total order on directions.
    std::sort(rays.begin(), rays.end(),
              [](const Ray& a, const Ray& b) { return cross(a.direction, b.direction) > 0; });
    for (std::size_t r = 0; r + 1 < rays.size(); ++r) {
      out.push_back({Simplex{apex, rays[r].nearest, rays[r + 1].nearest}, {k}, apex, std::nullopt});
    }
  }
  return out;
}

BasisLevel build_level(const Configuration& config, const ShellingOrder& order) {
  BasisLevel level{config, order, {}, {}, {}};
  const std::size_t n = config.dim();
  const std::size_t count = config.size();
  if (n == 1) {
    for (std::size_t k = 1; k < count; ++k) {
      level.elements.push_back({Simplex{order.at(k), order.at(k + 1)}, {}, order.at(k), std::nullopt});
    }
    return level;
  }
  const std::size_t steps = count > n ? count - n : 0;
  for (std::size_t k = 1; k <= steps; ++k) {
    auto pc = project_step(config, order, k);
    auto sub = build_level(pc.points, pc.order);
    if (n >= 3) {
      for (const auto& e : sub.elements) {
        std::vector<std::size_t> path{k};
        path.insert(path.end(), e.depth_path.begin(), e.depth_path.end());
        level.elements.push_back({mu_lift(e.simplex, pc), std::move(path), pc.apex, pc.nearest(e.apex)});
      }
    }
    level.projections.push_back(std::move(pc));
    level.sublevels.push_back(std::move(sub));
  }
  if (n == 2) {
    level.elements = build_basis_2d(config, order);
    // The fan construction must agree with lifting the 1-D construction on
    // each separating line; the expression engine relies on it.
    for (std::size_t k = 1; k <= steps; ++k) {
      std::set<Simplex> fan, lifted;
      for (const auto& e : level.elements) {
        if (e.depth_path.front() == k) fan.insert(e.simplex);
      }
      for (const auto& e : level.sublevels[k - 1].elements) {
        lifted.insert(mu_lift(e.simplex, level.projections[k - 1]));
      }
      if (fan != lifted) throw InternalError("planar fan disagrees with the lifted 1-D construction");
    }
  }
  return level;
}

ChamberChoice select_chamber(const Simplex& simplex, Label apex, std::optional<Label> edge_target,
                             const ChamberComplex& complex, TieBreak tie_break) {
  const std::size_t row = complex.simplices.index_of(simplex);
  if (row == SIZE_MAX) throw InternalError("select_chamber on a simplex outside Sigma");
  const Point& origin = complex.config.at(apex);
  std::optional<RationalVector> direction;
  if (edge_target) direction = complex.config.at(*edge_target) - origin;

  std::vector<std::size_t> candidates;
  for (const auto& ch : complex.chambers()) {
    if (!complex.matrix.at(row, ch.id)) continue;
    const bool adjacent = std::any_of(ch.cells.begin(), ch.cells.end(), [&](const ConvexCell& cell) {
      return direction ? cell.contains_initial_segment(origin, *direction)
                       : cell.closure_contains(origin);
    });
    if (adjacent) candidates.push_back(ch.id);
  }
  if (candidates.empty()) {
    throw InternalError("no chamber of " + to_string(simplex) + " is adjacent to its apex");
  }
  const std::size_t pick = tie_break == TieBreak::lex ? candidates.front() : candidates.back();
  return {pick, candidates.size()};
}

BasisPair build_basis(const ChamberComplex& complex, const ShellingOrder& order, TieBreak tie_break) {
  BasisPair pair{{}, build_level(complex.config, order)};
  for (const auto& e : pair.construction.elements) {
    const auto choice = select_chamber(e.simplex, e.apex, e.edge_target, complex, tie_break);
    if (complex.config.dim() == 2 && choice.candidates != 1) {
      throw InternalError("planar simplex " + to_string(e.simplex) +
                          " has more than one chamber at its apex");
    }
    pair.elements.push_back(
        {e.simplex, choice.chamber, e.depth_path, e.apex, e.edge_target, choice.candidates});
  }
  std::sort(pair.elements.begin(), pair.elements.end(), [](const BasisElement& a, const BasisElement& b) {
    if (a.depth_path != b.depth_path) return a.depth_path < b.depth_path;
    return a.simplex < b.simplex;
  });
  return pair;
}

BasisPair build_basis(const ChamberComplex& complex, TieBreak tie_break) {
  return build_basis(complex, shelling_order(complex.config), tie_break);
}

}  // namespace simbasis
