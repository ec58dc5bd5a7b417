#include "simbasis/chamber_complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "simbasis/combinatorics.hpp"
#include "simbasis/errors.hpp"

namespace simbasis {

std::size_t SimplexSet::index_of(const Simplex& s) const {
  const auto it = std::lower_bound(simplices.begin(), simplices.end(), s);
  if (it == simplices.end() || *it != s) return SIZE_MAX;
  return static_cast<std::size_t>(it - simplices.begin());
}

std::string IncidenceMatrix::row_string(std::size_t r) const {
  std::string s;
  s.reserve(cols_);
  for (auto b : bits_[r]) s.push_back(b ? '1' : '0');
  return s;
}

SimplexSet enumerate_simplices(const Configuration& config) {
  SimplexSet set;
  for_each_combination(config.size(), config.dim() + 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<Label> labels;
    for (auto i : idx) labels.push_back(static_cast<Label>(i + 1));
    Simplex s(std::move(labels));
    if (orientation(config.vertices(s)) != 0) set.simplices.push_back(std::move(s));
    return true;
  });
  return set;
}

std::vector<Hyperplane> wall_hyperplanes(const Configuration& config) {
  std::set<Hyperplane> walls;
  for_each_combination(config.size(), config.dim(), [&](const std::vector<std::size_t>& idx) {
    std::vector<Point> pts;
    for (auto i : idx) pts.push_back(config.points()[i]);
    if (auto h = affine_hull_hyperplane(pts)) walls.insert(std::move(*h));
    return true;
  });
  return {walls.begin(), walls.end()};
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t largest_axis(const RationalVector& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (abs(v[i]) > abs(v[best])) best = i;
  }
  return best;
}

Point drop_axis(const Point& p, std::size_t axis) {
  Point q;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i != axis) q.coords.push_back(p[i]);
  }
  return q;
}

// The (n-1)-simplices with vertices in E that lie on one wall, in a frame of
// the wall.
struct WallCover {
  std::size_t axis = 0;
  std::vector<SimplexRegion> pieces;
  bool trivially_covered = false;  // n = 1: the wall is a point of E

  bool covers(const Point& p) const {
    if (trivially_covered) return true;
    const Point q = drop_axis(p, axis);
    return std::any_of(pieces.begin(), pieces.end(), [&](const SimplexRegion& r) {
      return r.classify(q) == Containment::interior;
    });
  }
};

WallCover make_cover(const Hyperplane& h, const Configuration& config) {
  WallCover cover;
  const std::size_t n = config.dim();
  if (n == 1) {
    cover.trivially_covered = true;
    return cover;
  }
  cover.axis = largest_axis(h.normal());
  std::vector<Point> on;
  for (const auto& p : config.points()) {
    if (h.side(p) == 0) on.push_back(drop_axis(p, cover.axis));
  }
  for_each_combination(on.size(), n, [&](const std::vector<std::size_t>& idx) {
    std::vector<Point> verts;
    for (auto i : idx) verts.push_back(on[i]);
    if (affine_rank(verts) == static_cast<int>(n) - 1) cover.pieces.emplace_back(verts);
    return true;
  });
  return cover;
}

std::vector<SimplexRegion> simplex_regions(const SimplexSet& simplices, const Configuration& config) {
  std::vector<SimplexRegion> regions;
  regions.reserve(simplices.size());
  for (const auto& s : simplices.simplices) regions.emplace_back(config.vertices(s));
  return regions;
}

std::vector<std::uint8_t> membership(const Point& p, const std::vector<SimplexRegion>& regions) {
  std::vector<std::uint8_t> bits(regions.size(), 0);
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const auto c = regions[i].classify(p);
    if (c == Containment::boundary) {
      throw InternalError("chamber representative lies on a simplex boundary");
    }
    bits[i] = c == Containment::interior;
  }
  return bits;
}

}  // namespace

ChamberEnumeration enumerate_chambers(const Configuration& config) {
  if (!config.spans()) throw InputError("chamber enumeration needs a spanning configuration");
  const auto walls = wall_hyperplanes(config);
  const ConvexCell hull = ConvexCell::hull_of(config.points());

  std::vector<ConvexCell> cells{hull};
  for (const auto& h : walls) {
    std::vector<ConvexCell> next;
    next.reserve(cells.size());
    for (auto& cell : cells) {
      if (auto parts = cell.split(h)) {
        next.push_back(std::move(parts->first));
        next.push_back(std::move(parts->second));
      } else {
        next.push_back(std::move(cell));
      }
    }
    cells = std::move(next);
  }

  ChamberEnumeration out;
  out.cell_count = cells.size();
  out.hull_volume = hull.scaled_volume();
  out.cells_volume = 0;
  for (const auto& c : cells) out.cells_volume += c.scaled_volume();

  // Arrangement faces are shared exactly, so a facet is identified by its
  // hyperplane and vertex set.
  std::map<std::pair<Hyperplane, std::vector<Point>>, std::vector<std::size_t>> facet_owners;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (const auto& f : cells[i].facets()) {
      std::vector<Point> verts;
      for (auto v : f.vertices) verts.push_back(cells[i].vertices()[v]);
      std::sort(verts.begin(), verts.end());
      facet_owners[{cells[i].constraints()[f.constraint].plane, std::move(verts)}].push_back(i);
    }
  }

  const auto simplices = enumerate_simplices(config);
  const auto regions = simplex_regions(simplices, config);
  std::vector<Point> centers;
  std::vector<std::vector<std::uint8_t>> signature;
  for (const auto& c : cells) {
    centers.push_back(c.barycenter());
    signature.push_back(membership(centers.back(), regions));
  }

  std::map<Hyperplane, WallCover> covers;
  UnionFind uf(cells.size());
  for (const auto& [key, owners] : facet_owners) {
    if (owners.size() == 1) continue;
    if (owners.size() != 2) throw InternalError("arrangement facet shared by more than two cells");
    const Hyperplane& plane = key.first;
    auto it = covers.find(plane);
    if (it == covers.end()) it = covers.emplace(plane, make_cover(plane, config)).first;
    const Point mid = centroid(key.second);
    if (it->second.covers(mid)) continue;
    if (signature[owners[0]] != signature[owners[1]]) {
      throw InternalError("cells joined across an uncovered facet differ in simplex membership");
    }
    if (uf.unite(owners[0], owners[1])) ++out.merge_count;
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < cells.size(); ++i) groups[uf.find(i)].push_back(i);
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end(),
              [&](std::size_t a, std::size_t b) { return centers[a] < centers[b]; });
    Chamber ch;
    ch.representative = centers[members.front()];
    for (auto m : members) ch.cells.push_back(std::move(cells[m]));
    out.chambers.push_back(std::move(ch));
  }
  std::sort(out.chambers.begin(), out.chambers.end(),
            [](const Chamber& a, const Chamber& b) { return a.representative < b.representative; });
  for (std::size_t i = 0; i < out.chambers.size(); ++i) out.chambers[i].id = i;
  return out;
}

IncidenceMatrix incidence_matrix(const SimplexSet& simplices, const std::vector<Chamber>& chambers,
                                 const Configuration& config) {
  IncidenceMatrix a(simplices.size(), chambers.size());
  for (std::size_t r = 0; r < simplices.size(); ++r) {
    const SimplexRegion region(config.vertices(simplices.simplices[r]));
    for (std::size_t c = 0; c < chambers.size(); ++c) {
      const auto cls = region.classify(chambers[c].representative);
      if (cls == Containment::boundary) {
        throw InternalError("chamber representative on the boundary of simplex " +
                            to_string(simplices.simplices[r]));
      }
      a.set(r, c, cls == Containment::interior);
    }
  }
  return a;
}

std::vector<std::uint8_t> chamber_vector(const Simplex& s, const std::vector<Chamber>& chambers,
                                         const Configuration& config) {
  std::vector<std::uint8_t> bits(chambers.size(), 0);
  const auto verts = config.vertices(s);
  if (orientation(verts) == 0) return bits;
  const SimplexRegion region(verts);
  for (std::size_t c = 0; c < chambers.size(); ++c) {
    const auto cls = region.classify(chambers[c].representative);
    if (cls == Containment::boundary) throw InternalError("chamber representative on a simplex boundary");
    bits[c] = cls == Containment::interior;
  }
  return bits;
}

bool is_convex(const Chamber& chamber) {
  std::set<Point> pts;
  Rational volume = 0;
  for (const auto& cell : chamber.cells) {
    pts.insert(cell.vertices().begin(), cell.vertices().end());
    volume += cell.scaled_volume();
  }
  const std::vector<Point> all(pts.begin(), pts.end());
  return ConvexCell::hull_of(all).scaled_volume() == volume;
}

ChamberComplex::ChamberComplex(Configuration c)
    : config(std::move(c)),
      simplices(enumerate_simplices(config)),
      walls(wall_hyperplanes(config)),
      enumeration(enumerate_chambers(config)),
      matrix(incidence_matrix(simplices, enumeration.chambers, config)) {}

std::vector<std::uint8_t> ChamberComplex::row_of(const Simplex& s) const {
  const auto r = simplices.index_of(s);
  if (r != SIZE_MAX) return matrix.row(r);
  return chamber_vector(s, chambers(), config);
}

}  // namespace simbasis
