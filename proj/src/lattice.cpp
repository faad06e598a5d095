#include "itrig/lattice.hpp"

#include <algorithm>

#include "itrig/arith.hpp"

namespace itrig {

namespace {

void require_planar(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  if (a.size() != 2 || b.size() != 2 || c.size() != 2)
    fail(ErrorKind::DimensionMismatch, "planar points expected");
}

Integer cross(const IntVector& u, const IntVector& v) { return u(0) * v(1) - u(1) * v(0); }

}  // namespace

IntVector make_vector(std::initializer_list<long long> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long long x : xs) v(i++) = x;
  return v;
}

IntMatrix make_columns(std::initializer_list<std::initializer_list<long long>> cols) {
  const auto k = static_cast<Eigen::Index>(cols.size());
  const auto n = static_cast<Eigen::Index>(cols.begin()->size());
  IntMatrix m(n, k);
  Eigen::Index j = 0;
  for (const auto& col : cols) {
    if (static_cast<Eigen::Index>(col.size()) != n) fail(ErrorKind::DimensionMismatch, "ragged columns");
    m.col(j++) = make_vector(col);
  }
  return m;
}

Primitive primitive(const IntVector& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  if (g == 0) fail(ErrorKind::ZeroVector, "zero vector has no direction");
  IntVector u = v;
  for (Eigen::Index i = 0; i < u.size(); ++i) u(i) /= g;
  return {std::move(u), std::move(g)};
}

Integer integer_length(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "points of different dimension");
  IntVector d = b - a;
  if (d.isZero()) fail(ErrorKind::DegenerateSegment, "segment endpoints coincide");
  return primitive(d).length;
}

Integer integer_area(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  require_planar(a, b, c);
  Integer d = cross(b - a, c - b);
  if (d == 0) fail(ErrorKind::Collinear, "triangle vertices are collinear");
  return abs(d);
}

Simplex::Simplex(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) fail(ErrorKind::Degenerate, "a simplex needs at least two vertices");
  for (const auto& v : vertices_)
    if (v.size() != vertices_.front().size()) fail(ErrorKind::DimensionMismatch, "vertices of different dimension");
  if (order() > dim() || rank(edges()) != order()) fail(ErrorKind::Degenerate, "simplex edges are dependent");
}

IntMatrix Simplex::edges() const {
  IntMatrix m(dim(), order());
  for (Eigen::Index i = 0; i < order(); ++i) m.col(i) = vertices_[i + 1] - vertices_[0];
  return m;
}

Cone::Cone(LatticePoint vertex, IntMatrix edges) : vertex_(std::move(vertex)), edges_(std::move(edges)) { validate(); }

Cone::Cone(IntMatrix edges) : vertex_(IntVector::Zero(edges.rows())), edges_(std::move(edges)) { validate(); }

void Cone::validate() const {
  if (edges_.cols() < 1 || edges_.rows() < 1) fail(ErrorKind::DegenerateCone, "a cone needs at least one edge");
  if (vertex_.size() != edges_.rows()) fail(ErrorKind::DimensionMismatch, "vertex and edges differ in dimension");
  if (edges_.cols() > edges_.rows() || rank(edges_) != edges_.cols())
    fail(ErrorKind::DegenerateCone, "cone edges are linearly dependent");
}

IntMatrix Cone::primitive_edges() const {
  IntMatrix m(dim(), order());
  for (Eigen::Index i = 0; i < order(); ++i) m.col(i) = primitive(edges_.col(i)).unit;
  return m;
}

Integer integer_volume(const Simplex& s) { return determinantal_divisor(s.edges(), s.order()); }

Integer integer_sine(const Cone& c) { return determinantal_divisor(c.primitive_edges(), c.order()); }

Cone vertex_cone(const Simplex& s, std::size_t i) {
  const auto& v = s.vertices();
  if (i >= v.size()) fail(ErrorKind::IndexOutOfRange, "simplex has no vertex " + std::to_string(i));
  IntMatrix m(s.dim(), s.order());
  Eigen::Index j = 0;
  for (std::size_t x = 0; x < v.size(); ++x)
    if (x != i) m.col(j++) = v[x] - v[i];
  return Cone(v[i], std::move(m));
}

bool sine_rule_holds(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  const Integer area = integer_area(a, b, c);
  const Integer ab = integer_length(a, b), bc = integer_length(b, c), ac = integer_length(a, c);
  auto angle = [](const LatticePoint& at, const LatticePoint& p, const LatticePoint& q) {
    IntMatrix m(2, 2);
    m.col(0) = p - at;
    m.col(1) = q - at;
    return integer_sine(Cone(at, m));
  };
  const Rational target(area, ab * bc * ac);
  return Rational(angle(b, a, c), ac) == target && Rational(angle(c, b, a), ab) == target &&
         Rational(angle(a, c, b), bc) == target;
}

LatticeCount count_triangle_points(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  require_planar(a, b, c);
  Integer orient = cross(b - a, c - a);
  if (orient == 0) fail(ErrorKind::Collinear, "triangle vertices are collinear");
  const Integer x0 = std::min({a(0), b(0), c(0)}), x1 = std::max({a(0), b(0), c(0)});
  const Integer y0 = std::min({a(1), b(1), c(1)}), y1 = std::max({a(1), b(1), c(1)});
  if ((x1 - x0 + 1) * (y1 - y0 + 1) > 1000000)
    fail(ErrorKind::SearchBoundExceeded, "bounding box exceeds 10^6 lattice points");
  const int s = orient.sign();
  LatticeCount out{0, 0};
  IntVector p(2);
  for (Integer x = x0; x <= x1; x += 1) {
    for (Integer y = y0; y <= y1; y += 1) {
      p << x, y;
      const int d1 = cross(b - a, p - a).sign() * s;
      const int d2 = cross(c - b, p - b).sign() * s;
      const int d3 = cross(a - c, p - c).sign() * s;
      if (d1 < 0 || d2 < 0 || d3 < 0) continue;
      if (d1 > 0 && d2 > 0 && d3 > 0)
        out.interior += 1;
      else
        out.boundary += 1;
    }
  }
  return out;
}

bool pick_formula_holds(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  const auto n = count_triangle_points(a, b, c);
  // 2*area = is; 2*(I + E/2 - 1) = 2I + E - 2
  return integer_area(a, b, c) == 2 * n.interior + n.boundary - 2;
}

}  // namespace itrig
