#include "simbasis/projection.hpp"

#include "simbasis/errors.hpp"

namespace simbasis {

namespace {

std::size_t frame_axis(const RationalVector& normal) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < normal.size(); ++i) {
    if (abs(normal[i]) > abs(normal[best])) best = i;
  }
  return best;
}

}  // namespace

Point ProjectedConfiguration::to_frame(const Point& ambient_point) const {
  Point p;
  for (std::size_t i = 0; i < ambient_point.dim(); ++i) {
    if (i != dropped_axis) p.coords.push_back(ambient_point[i]);
  }
  return p;
}

ProjectedConfiguration project_step(const Configuration& config, const ShellingOrder& order,
                                    std::size_t k) {
  const std::size_t count = config.size();
  if (k < 1 || k >= count) throw InputError("projection step out of range");
  ProjectedConfiguration pc{.step = k,
                            .apex = order.at(k),
                            .hyperplane = order.separator(k),
                            .dropped_axis = frame_axis(order.functional),
                            .ambient = {},
                            .points = Configuration::relaxed(config.dim() - 1, {}),
                            .order = {},
                            .ray_nearest = {},
                            .projected_of = {}};
  const Point& apex = config.at(pc.apex);
  const Rational apex_value = dot(order.functional, apex.coords);
  const Rational gap = order.thresholds[k - 1] - apex_value;

  std::map<Point, Label> index;
  std::vector<Rational> best;  // ray parameter of the current nearest point
  for (std::size_t i = k + 1; i <= count; ++i) {
    const Label label = order.at(i);
    const Point& target = config.at(label);
    const auto hit = segment_hyperplane_intersection(apex, target, pc.hyperplane);
    if (!hit || *hit == apex || *hit == target) {
      throw InternalError("shelling hyperplane does not separate the apex from a later point");
    }
    // target = apex + s (hit - apex); smaller s is nearer to the apex.
    const Rational s = (dot(order.functional, target.coords) - apex_value) / gap;
    auto [it, inserted] = index.emplace(*hit, static_cast<Label>(pc.ambient.size() + 1));
    if (inserted) {
      pc.ambient.push_back(*hit);
      pc.ray_nearest.push_back(label);
      best.push_back(s);
    } else if (s < best[static_cast<std::size_t>(it->second - 1)]) {
      best[static_cast<std::size_t>(it->second - 1)] = s;
      pc.ray_nearest[static_cast<std::size_t>(it->second - 1)] = label;
    }
    pc.projected_of[label] = it->second;
  }

  std::vector<Point> frame;
  for (const auto& p : pc.ambient) frame.push_back(pc.to_frame(p));
  pc.points = Configuration::relaxed(config.dim() - 1, std::move(frame));
  if (pc.points.size() > 0) pc.order = shelling_order(pc.points);
  return pc;
}

Simplex mu_lift(const Simplex& projected, const ProjectedConfiguration& pc) {
  std::vector<Label> labels{pc.apex};
  for (Label l : projected.vertices) labels.push_back(pc.nearest(l));
  return Simplex(std::move(labels));
}

bool cone_contains(const Point& p, const ProjectedRegion& region, const ProjectedConfiguration& pc,
                   const Configuration& config) {
  const Point& apex = config.at(pc.apex);
  if (p == apex) throw InputError("cone membership of the apex itself is undefined");
  const auto& l = pc.hyperplane.normal();
  const Rational rise = dot(l, p.coords) - dot(l, apex.coords);
  const Rational gap = pc.hyperplane.offset() - dot(l, apex.coords);
  // The canonical normal may point either way; the ray reaches H_k only when
  // it moves toward the hyperplane.
  if (sgn(rise) != sgn(gap)) return false;
  const Point hit = pc.to_frame(lerp(apex, p, gap / rise));
  if (region.kind == ProjectedRegion::Kind::suffix_hull) {
    std::vector<Point> suffix;
    for (std::size_t i = region.j + 1; i <= pc.points.size(); ++i) {
      suffix.push_back(pc.points.at(pc.order.at(i)));
    }
    return in_hull(hit, suffix);
  }
  return ShellingRegions(pc.points, pc.order).region_index(hit) == region.j;
}

}  // namespace simbasis
