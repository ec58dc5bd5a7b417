#include "simbasis/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "simbasis/errors.hpp"
#include "simbasis/linalg.hpp"

namespace simbasis {

bool operator<(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                      b.coords.end());
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? "," : "") << p[i];
  return os << ')';
}

RationalVector operator-(const Point& a, const Point& b) {
  RationalVector d(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) d[i] = a[i] - b[i];
  return d;
}

Point operator+(const Point& a, const RationalVector& d) {
  Point r = a;
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] += d[i];
  return r;
}

Point lerp(const Point& a, const Point& b, const Rational& t) {
  Point r = a;
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] += t * (b[i] - a[i]);
  return r;
}

Point centroid(std::span<const Point> points) {
  Point c(RationalVector(points.front().dim(), Rational(0)));
  for (const auto& p : points) {
    for (std::size_t i = 0; i < p.dim(); ++i) c[i] += p[i];
  }
  const Rational count(static_cast<long>(points.size()));
  for (auto& v : c.coords) v /= count;
  return c;
}

Hyperplane::Hyperplane(RationalVector normal, Rational offset)
    : normal_(std::move(normal)), offset_(std::move(offset)) {
  Integer lcm_den = offset_.get_den();
  for (const auto& v : normal_) lcm_den = lcm(lcm_den, Integer(v.get_den()));
  Integer g = 0;
  for (const auto& v : normal_) {
    const Integer scaled = v.get_num() * (lcm_den / v.get_den());
    g = gcd(g, scaled);
  }
  if (g == 0) throw InternalError("hyperplane with zero normal");
  g = gcd(g, Integer(offset_.get_num() * (lcm_den / offset_.get_den())));
  const auto lead = std::find_if(normal_.begin(), normal_.end(),
                                 [](const Rational& v) { return v != 0; });
  Rational scale(lcm_den, g);
  if (*lead < 0) scale = -scale;
  for (auto& v : normal_) v *= scale;
  offset_ *= scale;
}

bool operator<(const Hyperplane& a, const Hyperplane& b) {
  if (a.normal_ != b.normal_) {
    return std::lexicographical_compare(a.normal_.begin(), a.normal_.end(), b.normal_.begin(),
                                        b.normal_.end());
  }
  return a.offset_ < b.offset_;
}

std::ostream& operator<<(std::ostream& os, const Hyperplane& h) {
  for (std::size_t i = 0; i < h.dim(); ++i) os << (i ? " + " : "") << h.normal()[i] << "*x" << i;
  return os << " = " << h.offset();
}

Simplex::Simplex(std::vector<Label> labels) : vertices(std::move(labels)) {
  std::sort(vertices.begin(), vertices.end());
}

bool Simplex::contains(Label l) const {
  return std::binary_search(vertices.begin(), vertices.end(), l);
}

std::string to_string(const Simplex& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
  os << '[';
  for (std::size_t i = 0; i < s.vertices.size(); ++i) os << (i ? "," : "") << s.vertices[i];
  return os << ']';
}

std::string to_string(Containment c) {
  switch (c) {
    case Containment::interior: return "interior";
    case Containment::boundary: return "boundary";
    case Containment::outside: return "outside";
  }
  return "?";
}

namespace {

RationalMatrix edge_matrix(std::span<const Point> points) {
  RationalMatrix m;
  m.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) m.push_back(points[i] - points[0]);
  return m;
}

}  // namespace

int orientation(std::span<const Point> points) {
  if (points.empty()) throw InputError("orientation of an empty point list");
  const std::size_t n = points.front().dim();
  if (points.size() != n + 1) throw InputError("orientation needs n+1 points in n-space");
  for (const auto& p : points) {
    if (p.dim() != n) throw InputError("dimension mismatch in orientation");
  }
  return sgn(determinant(edge_matrix(points)));
}

int affine_rank(std::span<const Point> points) {
  if (points.empty()) return -1;
  return static_cast<int>(rank(edge_matrix(points)));
}

Containment classify_in_simplex(const Point& p, std::span<const Point> vertices) {
  const std::size_t n = p.dim();
  if (vertices.size() != n + 1) throw InputError("simplex needs n+1 vertices");
  // Solve p = sum lambda_i v_i with sum lambda_i = 1.
  RationalMatrix a(n + 1, RationalVector(n + 1));
  RationalVector b(n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    if (vertices[r].dim() != n) throw InputError("dimension mismatch in simplex test");
    for (std::size_t c = 0; c <= n; ++c) a[r][c] = vertices[c][r];
    b[r] = p[r];
  }
  if (vertices[n].dim() != n) throw InputError("dimension mismatch in simplex test");
  for (std::size_t c = 0; c <= n; ++c) a[n][c] = 1;
  b[n] = 1;
  if (determinant(a) == 0) throw DegenerateInput("simplex vertices are affinely dependent");
  const auto lambda = solve(std::move(a), std::move(b));
  bool zero = false;
  for (const auto& l : *lambda) {
    if (l < 0) return Containment::outside;
    if (l == 0) zero = true;
  }
  return zero ? Containment::boundary : Containment::interior;
}

std::vector<Point> gather(const Simplex& s, std::span<const Point> table) {
  std::vector<Point> pts;
  pts.reserve(s.vertices.size());
  for (Label l : s.vertices) pts.push_back(table[static_cast<std::size_t>(l - 1)]);
  return pts;
}

Containment point_vs_simplex(const Point& p, const Simplex& s, std::span<const Point> table) {
  const auto verts = gather(s, table);
  return classify_in_simplex(p, verts);
}

std::optional<Point> segment_hyperplane_intersection(const Point& a, const Point& b,
                                                     const Hyperplane& h) {
  const Rational fa = h.evaluate(a);
  const Rational fb = h.evaluate(b);
  const int sa = sgn(fa);
  const int sb = sgn(fb);
  if (sa == 0 && sb == 0) throw DegenerateInput("segment lies inside the hyperplane");
  if (sa == 0) return a;
  if (sb == 0) return b;
  if (sa == sb) return std::nullopt;
  return lerp(a, b, fa / (fa - fb));
}

std::optional<Hyperplane> affine_hull_hyperplane(std::span<const Point> points) {
  if (points.empty()) return std::nullopt;
  const std::size_t n = points.front().dim();
  if (points.size() != n) throw InputError("affine hull hyperplane needs n points in n-space");
  const auto kernel = null_space(edge_matrix(points), n);
  if (kernel.size() != 1) return std::nullopt;
  const Rational offset = dot(kernel.front(), points.front().coords);
  return Hyperplane(kernel.front(), offset);
}

SimplexRegion::SimplexRegion(std::span<const Point> vertices) {
  const std::size_t count = vertices.size();
  for (std::size_t skip = 0; skip < count; ++skip) {
    std::vector<Point> facet;
    for (std::size_t i = 0; i < count; ++i) {
      if (i != skip) facet.push_back(vertices[i]);
    }
    auto h = affine_hull_hyperplane(facet);
    if (!h) throw DegenerateInput("simplex vertices are affinely dependent");
    const int s = h->side(vertices[skip]);
    if (s == 0) throw DegenerateInput("simplex vertices are affinely dependent");
    facets_.push_back(std::move(*h));
    inward_.push_back(s);
  }
}

Containment SimplexRegion::classify(const Point& p) const {
  bool zero = false;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    const int s = facets_[i].side(p) * inward_[i];
    if (s < 0) return Containment::outside;
    if (s == 0) zero = true;
  }
  return zero ? Containment::boundary : Containment::interior;
}

}  // namespace simbasis
