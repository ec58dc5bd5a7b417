#pragma once

// Test-side oracles. Everything here is deliberately naive and shares no code
// with the library beyond the value types.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "simbasis/basis.hpp"
#include "simbasis/chamber_complex.hpp"
#include "simbasis/relations.hpp"

namespace oracle {

using namespace simbasis;

inline Configuration make(std::size_t dim, std::vector<std::vector<long>> rows) {
  std::vector<Point> pts;
  for (auto& r : rows) {
    RationalVector c;
    for (long v : r) c.emplace_back(v);
    pts.emplace_back(std::move(c));
  }
  return Configuration(dim, std::move(pts));
}

inline Configuration triangle() { return make(2, {{0, 0}, {4, 0}, {0, 4}}); }
inline Configuration quadrilateral() { return make(2, {{0, 0}, {4, 0}, {5, 3}, {1, 4}}); }
inline Configuration triangle_with_center() { return make(2, {{0, 0}, {6, 0}, {0, 6}, {2, 2}}); }
inline Configuration tetrahedron() { return make(3, {{0, 0, 0}, {4, 0, 0}, {0, 4, 0}, {0, 0, 4}}); }
inline Configuration tetrahedron_with_center() {
  return make(3, {{0, 0, 0}, {8, 0, 0}, {0, 8, 0}, {0, 0, 8}, {2, 2, 2}});
}
// Planar six points whose file order is the shelling order and whose basis
// per step is {153, 134, 142}, {253, 236, 264}, {356, 364}, {456}.
inline Configuration six_point_anchor() { return make(2, {{7, 1}, {5, 2}, {3, 5}, {0, 6}, {6, 5}, {0, 8}}); }

// Determinant by cofactor expansion.
inline Rational det(const std::vector<RationalVector>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<RationalVector> minor;
    for (std::size_t r = 1; r < n; ++r) {
      RationalVector row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(m[r][j]);
      }
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

inline int orient(const std::vector<Point>& pts) {
  std::vector<RationalVector> m;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RationalVector row;
    for (std::size_t j = 0; j < pts[0].dim(); ++j) row.push_back(pts[i][j] - pts[0][j]);
    m.push_back(std::move(row));
  }
  return sgn(det(m));
}

// Plain rational Gaussian elimination.
inline std::size_t rank(std::vector<RationalVector> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const IncidenceMatrix& a) {
  std::vector<RationalVector> m;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    RationalVector row;
    for (auto b : a.row(r)) row.emplace_back(b);
    m.push_back(std::move(row));
  }
  return rank(std::move(m));
}

// Strictly inside the simplex: every barycentric sign agrees with the
// simplex orientation.
inline bool strictly_inside(const Point& p, const std::vector<Point>& verts) {
  const int o = orient(verts);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    auto v = verts;
    v[i] = p;
    if (orient(v) != o) return false;
  }
  return true;
}

inline std::vector<Simplex> simplices(const Configuration& config) {
  std::vector<Simplex> out;
  const std::size_t n = config.dim(), count = config.size();
  std::vector<int> pick(count, 0);
  std::fill(pick.end() - static_cast<long>(n + 1), pick.end(), 1);
  do {
    std::vector<Label> labels;
    for (std::size_t i = 0; i < count; ++i) {
      if (pick[i]) labels.push_back(static_cast<Label>(i + 1));
    }
    Simplex s(labels);
    if (orient(config.vertices(s)) != 0) out.push_back(s);
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// Membership signatures of sample points: a grid over the bounding box with a
// generic offset, skipping points on any simplex boundary or outside P.
// Every distinct signature is a distinct chamber column.
inline std::set<std::vector<std::uint8_t>> sampled_signatures(const Configuration& config, int steps) {
  const auto all = simplices(config);
  const std::size_t n = config.dim();
  RationalVector lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    lo[j] = hi[j] = config.points()[0][j];
    for (const auto& p : config.points()) {
      lo[j] = std::min(lo[j], p[j]);
      hi[j] = std::max(hi[j], p[j]);
    }
  }
  std::set<std::vector<std::uint8_t>> out;
  std::vector<int> idx(n, 0);
  while (true) {
    Point p;
    for (std::size_t j = 0; j < n; ++j) {
      // Offsets 1/(7+j) keep samples off rational walls of small height.
      const Rational t = (Rational(idx[j]) + Rational(1, 7 + 2 * static_cast<long>(j))) / steps;
      p.coords.push_back(lo[j] + (hi[j] - lo[j]) * t);
    }
    std::vector<std::uint8_t> sig;
    bool on_wall = false, inside_any = false;
    for (const auto& s : all) {
      const auto verts = config.vertices(s);
      const int o = orient(verts);
      bool in = true, closed = true;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        auto v = verts;
        v[i] = p;
        const int side = orient(v);
        if (side != o) in = false;
        if (side != 0 && side != o) closed = false;
      }
      if (closed && !in) on_wall = true;
      inside_any = inside_any || in;
      sig.push_back(in ? 1 : 0);
    }
    if (!on_wall && inside_any) out.insert(sig);
    std::size_t j = 0;
    while (j < n && ++idx[j] == steps) idx[j++] = 0;
    if (j == n) break;
  }
  return out;
}

inline std::set<std::vector<std::uint8_t>> matrix_columns(const IncidenceMatrix& a) {
  std::set<std::vector<std::uint8_t>> out;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::vector<std::uint8_t> col;
    for (std::size_t r = 0; r < a.rows(); ++r) col.push_back(a.at(r, c));
    out.insert(col);
  }
  return out;
}

// Closure of B under one-step rewrites over every F-set of E.
inline std::set<Simplex> f_closure(const std::set<Simplex>& basis, const Configuration& config) {
  std::set<Simplex> avail = basis;
  // Members computed here from orientations, not by the library.
  std::vector<std::vector<Simplex>> sets;
  const std::size_t n = config.dim(), count = config.size();
  if (count >= n + 2) {
    std::vector<int> pick(count, 0);
    std::fill(pick.end() - static_cast<long>(n + 2), pick.end(), 1);
    do {
      std::vector<Label> support;
      for (std::size_t i = 0; i < count; ++i) {
        if (pick[i]) support.push_back(static_cast<Label>(i + 1));
      }
      std::vector<Simplex> members;
      for (std::size_t skip = 0; skip < support.size(); ++skip) {
        std::vector<Label> labels;
        for (std::size_t i = 0; i < support.size(); ++i) {
          if (i != skip) labels.push_back(support[i]);
        }
        Simplex s(labels);
        if (orient(config.vertices(s)) != 0) members.push_back(s);
      }
      if (!members.empty()) sets.push_back(std::move(members));
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& members : sets) {
      std::vector<Simplex> missing;
      for (const auto& m : members) {
        if (!avail.count(m)) missing.push_back(m);
      }
      if (missing.size() == 1) {
        avail.insert(missing[0]);
        grew = true;
      }
    }
  }
  return avail;
}

// Random configurations with forced degeneracies: some points are placed on
// lines through two earlier points (collinear triples), and in 3-D some on
// planes through three (coplanar quadruples).
inline Configuration random_configuration(std::mt19937& rng, std::size_t n, std::size_t count) {
  while (true) {
    std::vector<Point> pts;
    std::set<Point> seen;
    int guard = 0;
    while (pts.size() < count && ++guard < 1000) {
      Point p;
      for (std::size_t j = 0; j < n; ++j) p.coords.emplace_back(static_cast<long>(rng() % 9) - 4);
      const auto roll = rng() % 6;
      if (roll == 0 && pts.size() >= 2) {
        const auto& a = pts[rng() % pts.size()];
        const auto& b = pts[rng() % pts.size()];
        p = lerp(a, b, Rational(static_cast<long>(rng() % 5) - 1, 2));
      } else if (roll == 1 && n == 3 && pts.size() >= 3) {
        const auto& a = pts[rng() % pts.size()];
        const auto& b = pts[rng() % pts.size()];
        const auto& c = pts[rng() % pts.size()];
        const Rational s(static_cast<long>(rng() % 3), 2), t(static_cast<long>(rng() % 3) - 1, 2);
        for (std::size_t j = 0; j < n; ++j) p[j] = a[j] + (b[j] - a[j]) * s + (c[j] - a[j]) * t;
      }
      if (seen.insert(p).second) pts.push_back(p);
    }
    if (pts.size() < count) continue;
    auto relaxed = Configuration::relaxed(n, pts);
    if (relaxed.spans()) return Configuration(n, pts);
  }
}

}  // namespace oracle
