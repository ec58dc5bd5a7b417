#include "simbasis/configuration.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "simbasis/errors.hpp"

namespace simbasis {

void Configuration::check_points() const {
  std::set<Point> seen;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].dim() != dim_) {
      throw InputError("point " + std::to_string(i + 1) + " has dimension " +
                       std::to_string(points_[i].dim()) + ", expected " + std::to_string(dim_));
    }
    if (!seen.insert(points_[i]).second) {
      throw InputError("duplicate point at label " + std::to_string(i + 1));
    }
  }
}

Configuration::Configuration(std::size_t dim, std::vector<Point> points)
    : dim_(dim), points_(std::move(points)) {
  if (dim_ < 2) throw InputError("dimension must be at least 2");
  check_points();
  if (points_.size() <= dim_) throw InputError("need more than n points");
  if (!spans()) throw InputError("configuration does not span the space (no n+1 independent points)");
}

Configuration Configuration::relaxed(std::size_t dim, std::vector<Point> points) {
  Configuration c;
  c.dim_ = dim;
  c.points_ = std::move(points);
  c.check_points();
  return c;
}

bool Configuration::spans() const {
  return affine_rank(points_) == static_cast<int>(dim_);
}

bool Configuration::is_simplex(const Simplex& s) const {
  if (s.vertices.size() != dim_ + 1) return false;
  for (Label l : s.vertices) {
    if (!has_label(l)) return false;
  }
  return orientation(vertices(s)) != 0;
}

std::size_t ShellingOrder::position(Label l) const {
  const auto it = std::find(permutation.begin(), permutation.end(), l);
  if (it == permutation.end()) throw InputError("unknown label " + std::to_string(l));
  return static_cast<std::size_t>(it - permutation.begin()) + 1;
}

Hyperplane ShellingOrder::separator(std::size_t k) const {
  return Hyperplane(functional, thresholds.at(k - 1));
}

bool is_generic_direction(const Configuration& config, const RationalVector& direction) {
  if (direction.size() != config.dim()) return false;
  std::set<Rational> values;
  for (const auto& p : config.points()) {
    if (!values.insert(dot(direction, p.coords)).second) return false;
  }
  return true;
}

RationalVector choose_generic_direction(const Configuration& config) {
  for (long m = 1;; ++m) {
    RationalVector l(config.dim());
    Rational power = 1;
    for (auto& v : l) {
      v = power;
      power *= m;
    }
    if (is_generic_direction(config, l)) return l;
  }
}

ShellingOrder shelling_order(const Configuration& config) {
  return shelling_order(config, choose_generic_direction(config));
}

ShellingOrder shelling_order(const Configuration& config, const RationalVector& direction) {
  if (!is_generic_direction(config, direction)) {
    throw InputError("direction does not separate all points");
  }
  ShellingOrder order;
  order.functional = direction;
  std::vector<Rational> value;
  for (const auto& p : config.points()) value.push_back(dot(direction, p.coords));
  order.permutation.resize(config.size());
  std::iota(order.permutation.begin(), order.permutation.end(), 1);
  std::sort(order.permutation.begin(), order.permutation.end(),
            [&](Label a, Label b) { return value[a - 1] < value[b - 1]; });
  for (std::size_t k = 1; k < config.size(); ++k) {
    const Rational lo = value[order.permutation[k - 1] - 1];
    const Rational hi = value[order.permutation[k] - 1];
    order.thresholds.push_back((lo + hi) / 2);
  }
  return order;
}

ShellingRegions::ShellingRegions(const Configuration& config, const ShellingOrder& order) {
  const std::size_t n = config.dim();
  const std::size_t count = config.size();
  steps_ = count > n ? count - n : 0;
  for (std::size_t j = 0; j <= steps_; ++j) {
    std::vector<Point> suffix;
    for (std::size_t i = j; i < count; ++i) suffix.push_back(config.at(order.permutation[i]));
    hulls_.emplace_back(std::move(suffix));
  }
}

std::optional<std::size_t> ShellingRegions::region_index(const Point& p) const {
  if (hulls_.empty() || !hulls_.front().contains(p)) return std::nullopt;
  for (std::size_t k = 1; k <= steps_; ++k) {
    if (!hulls_[k].interior_contains(p)) return k;
  }
  return std::nullopt;
}

bool ShellingRegions::in_open_region(const Point& p, std::size_t k) const {
  return hulls_.at(k - 1).interior_contains(p) && !hulls_.at(k).contains(p);
}

std::optional<std::size_t> region_index(const Point& p, const ShellingOrder& order,
                                        const Configuration& config) {
  return ShellingRegions(config, order).region_index(p);
}

}  // namespace simbasis
