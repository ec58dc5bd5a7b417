#include "simbasis/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "simbasis/combinatorics.hpp"
#include "simbasis/errors.hpp"
#include "simbasis/linalg.hpp"

namespace simbasis {

std::vector<Halfspace> hull_facets(std::span<const Point> points) {
  const std::size_t n = points.front().dim();
  std::set<Hyperplane> seen;
  std::vector<Halfspace> facets;
  for_each_combination(points.size(), n, [&](const std::vector<std::size_t>& idx) {
    std::vector<Point> sub;
    for (auto i : idx) sub.push_back(points[i]);
    auto h = affine_hull_hyperplane(sub);
    if (!h || !seen.insert(*h).second) return true;
    int pos = 0, neg = 0;
    for (const auto& p : points) {
      const int s = h->side(p);
      pos += s > 0;
      neg += s < 0;
    }
    if (pos == 0 && neg == 0) throw InternalError("hull of a lower-dimensional point set");
    if (pos == 0 || neg == 0) facets.push_back({*h, pos > 0 ? 1 : -1});
    return true;
  });
  return facets;
}

namespace {

bool in_simplex_closure(const Point& p, std::span<const Point> verts) {
  const std::size_t n = p.dim();
  const std::size_t k = verts.size();
  RationalMatrix a(n + 1, RationalVector(k));
  RationalVector b(n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = verts[c][r];
    b[r] = p[r];
  }
  for (std::size_t c = 0; c < k; ++c) a[n][c] = 1;
  b[n] = 1;
  const auto lambda = solve(std::move(a), std::move(b));
  if (!lambda) return false;
  return std::all_of(lambda->begin(), lambda->end(), [](const Rational& l) { return l >= 0; });
}

}  // namespace

bool in_hull(const Point& p, std::span<const Point> points) {
  if (points.empty()) return false;
  const std::size_t n = p.dim();
  const std::size_t max_k = std::min(n + 1, points.size());
  bool found = false;
  for (std::size_t k = 1; k <= max_k && !found; ++k) {
    for_each_combination(points.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<Point> sub;
      for (auto i : idx) sub.push_back(points[i]);
      if (affine_rank(sub) != static_cast<int>(k) - 1) return true;
      if (in_simplex_closure(p, sub)) found = true;
      return !found;
    });
  }
  return found;
}

PointHull::PointHull(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) return;
  full_dim_ = affine_rank(points_) == static_cast<int>(points_.front().dim());
  if (full_dim_) facets_ = hull_facets(points_);
}

bool PointHull::contains(const Point& p) const {
  if (!full_dim_) return in_hull(p, points_);
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Halfspace& f) { return f.contains(p); });
}

bool PointHull::interior_contains(const Point& p) const {
  if (!full_dim_) return false;
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Halfspace& f) { return f.strictly_contains(p); });
}

namespace {

RationalMatrix normals_of(const std::vector<Halfspace>& cs, const std::vector<std::size_t>& idx) {
  RationalMatrix m;
  m.reserve(idx.size());
  for (auto i : idx) m.push_back(cs[i].plane.normal());
  return m;
}

std::vector<std::size_t> intersect_sorted(const std::vector<std::size_t>& a,
                                          const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

ConvexCell ConvexCell::hull_of(std::span<const Point> points) {
  ConvexCell cell;
  cell.dim_ = points.front().dim();
  cell.constraints_ = hull_facets(points);
  for (const auto& p : points) {
    std::vector<std::size_t> tight;
    for (std::size_t c = 0; c < cell.constraints_.size(); ++c) {
      if (cell.constraints_[c].plane.side(p) == 0) tight.push_back(c);
    }
    if (rank(normals_of(cell.constraints_, tight)) == cell.dim_) {
      cell.vertices_.push_back(p);
      cell.tight_.push_back(std::move(tight));
    }
  }
  return cell;
}

bool ConvexCell::adjacent(std::size_t u, std::size_t w) const {
  const auto common = intersect_sorted(tight_[u], tight_[w]);
  if (common.size() + 1 < dim_) return false;
  return rank(normals_of(constraints_, common)) + 1 == dim_;
}

void ConvexCell::prune() {
  std::vector<std::size_t> remap(constraints_.size(), SIZE_MAX);
  std::vector<Halfspace> kept;
  for (std::size_t c = 0; c < constraints_.size(); ++c) {
    std::vector<Point> on;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (std::binary_search(tight_[v].begin(), tight_[v].end(), c)) on.push_back(vertices_[v]);
    }
    if (affine_rank(on) == static_cast<int>(dim_) - 1) {
      remap[c] = kept.size();
      kept.push_back(constraints_[c]);
    }
  }
  for (auto& t : tight_) {
    std::vector<std::size_t> mapped;
    for (auto c : t) {
      if (remap[c] != SIZE_MAX) mapped.push_back(remap[c]);
    }
    t = std::move(mapped);
  }
  constraints_ = std::move(kept);
}

std::optional<std::pair<ConvexCell, ConvexCell>> ConvexCell::split(const Hyperplane& h) const {
  const std::size_t nv = vertices_.size();
  std::vector<Rational> value(nv);
  std::vector<int> side(nv);
  bool pos = false, neg = false;
  for (std::size_t v = 0; v < nv; ++v) {
    value[v] = h.evaluate(vertices_[v]);
    side[v] = sgn(value[v]);
    pos |= side[v] > 0;
    neg |= side[v] < 0;
  }
  if (!pos || !neg) return std::nullopt;

  const std::size_t cut = constraints_.size();
  std::vector<Point> crossing;
  std::vector<std::vector<std::size_t>> crossing_tight;
  for (std::size_t u = 0; u < nv; ++u) {
    if (side[u] <= 0) continue;
    for (std::size_t w = 0; w < nv; ++w) {
      if (side[w] >= 0 || !adjacent(u, w)) continue;
      crossing.push_back(lerp(vertices_[u], vertices_[w], value[u] / (value[u] - value[w])));
      auto t = intersect_sorted(tight_[u], tight_[w]);
      t.push_back(cut);
      crossing_tight.push_back(std::move(t));
    }
  }

  auto make = [&](int keep) {
    ConvexCell piece;
    piece.dim_ = dim_;
    piece.constraints_ = constraints_;
    piece.constraints_.push_back({h, keep});
    for (std::size_t v = 0; v < nv; ++v) {
      if (side[v] * keep < 0) continue;
      piece.vertices_.push_back(vertices_[v]);
      auto t = tight_[v];
      if (side[v] == 0) t.push_back(cut);
      piece.tight_.push_back(std::move(t));
    }
    for (std::size_t i = 0; i < crossing.size(); ++i) {
      piece.vertices_.push_back(crossing[i]);
      piece.tight_.push_back(crossing_tight[i]);
    }
    piece.prune();
    return piece;
  };
  return std::make_pair(make(1), make(-1));
}

Point ConvexCell::barycenter() const { return centroid(vertices_); }

bool ConvexCell::closure_contains(const Point& p) const {
  return std::all_of(constraints_.begin(), constraints_.end(),
                     [&](const Halfspace& c) { return c.contains(p); });
}

bool ConvexCell::contains_initial_segment(const Point& p, const RationalVector& d) const {
  for (const auto& c : constraints_) {
    const int s = c.plane.side(p) * c.side;
    if (s < 0) return false;
    if (s == 0 && sgn(dot(c.plane.normal(), d)) * c.side < 0) return false;
  }
  return true;
}

std::vector<ConvexCell::Facet> ConvexCell::facets() const {
  std::vector<Facet> out;
  for (std::size_t c = 0; c < constraints_.size(); ++c) {
    Facet f{c, {}};
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (std::binary_search(tight_[v].begin(), tight_[v].end(), c)) f.vertices.push_back(v);
    }
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

struct Triangulator {
  const std::vector<Point>& vertices;
  const std::vector<std::vector<std::size_t>>& tight;
  std::size_t constraint_count;

  // Pulling triangulation of the face spanned by `face` (vertex indices) of
  // dimension d.
  void run(const std::vector<std::size_t>& face, int d, std::vector<std::size_t>& prefix,
           std::vector<std::vector<std::size_t>>& out) const {
    if (d == 0) {
      prefix.push_back(face.front());
      out.push_back(prefix);
      prefix.pop_back();
      return;
    }
    const std::size_t apex = face.front();
    std::set<std::vector<std::size_t>> subfaces;
    for (std::size_t c = 0; c < constraint_count; ++c) {
      std::vector<std::size_t> on;
      for (auto v : face) {
        if (std::binary_search(tight[v].begin(), tight[v].end(), c)) on.push_back(v);
      }
      if (on.size() == face.size() || on.empty()) continue;
      if (std::binary_search(on.begin(), on.end(), apex)) continue;
      std::vector<Point> pts;
      for (auto v : on) pts.push_back(vertices[v]);
      if (affine_rank(pts) != d - 1) continue;
      subfaces.insert(std::move(on));
    }
    prefix.push_back(apex);
    for (const auto& sub : subfaces) run(sub, d - 1, prefix, out);
    prefix.pop_back();
  }
};

}  // namespace

Rational ConvexCell::scaled_volume() const {
  std::vector<std::size_t> all(vertices_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  Triangulator tri{vertices_, tight_, constraints_.size()};
  std::vector<std::vector<std::size_t>> simplices;
  std::vector<std::size_t> prefix;
  tri.run(all, static_cast<int>(dim_), prefix, simplices);
  Rational total = 0;
  for (const auto& s : simplices) {
    RationalMatrix m;
    for (std::size_t i = 1; i < s.size(); ++i) m.push_back(vertices_[s[i]] - vertices_[s[0]]);
    total += abs(determinant(std::move(m)));
  }
  return total;
}

}  // namespace simbasis
