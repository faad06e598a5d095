#pragma once

#include <vector>

#include "itrig/integer.hpp"
#include "itrig/rational.hpp"

namespace itrig {

using LatticePoint = IntVector;

struct Primitive {
  IntVector unit;
  Integer length;
};

// Splits v into its integer length and the primitive vector along it.
Primitive primitive(const IntVector& v);

// Number of lattice points on [a, b] minus one.
Integer integer_length(const LatticePoint& a, const LatticePoint& b);

// |det(b - a, c - b)| for planar points.
Integer integer_area(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

// Ordered simplex A0 A1 ... Ak in R^n with independent edges A0Ai.
class Simplex {
 public:
  explicit Simplex(std::vector<LatticePoint> vertices);

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  Eigen::Index dim() const { return vertices_.front().size(); }
  Eigen::Index order() const { return static_cast<Eigen::Index>(vertices_.size()) - 1; }
  // n x k matrix of the edges A0Ai.
  IntMatrix edges() const;

 private:
  std::vector<LatticePoint> vertices_;
};

// Ordered simplicial cone: a vertex and k independent integer edge vectors (columns).
class Cone {
 public:
  Cone(LatticePoint vertex, IntMatrix edges);
  explicit Cone(IntMatrix edges);

  const LatticePoint& vertex() const { return vertex_; }
  const IntMatrix& edges() const { return edges_; }
  Eigen::Index dim() const { return edges_.rows(); }
  Eigen::Index order() const { return edges_.cols(); }
  auto edge(Eigen::Index i) const { return edges_.col(i); }

  Cone with_edges(IntMatrix edges) const { return Cone(vertex_, std::move(edges)); }
  // Edges divided by their integer lengths.
  IntMatrix primitive_edges() const;

 private:
  void validate() const;

  LatticePoint vertex_;
  IntMatrix edges_;
};

Integer integer_volume(const Simplex& s);
Integer integer_sine(const Cone& c);

// Cone at vertex i of the simplex, edges towards the other vertices in order.
Cone vertex_cone(const Simplex& s, std::size_t i);

// isin(angle at B)/il(AC) = isin(angle at C)/il(AB) = isin(angle at A)/il(BC) = is/(il il il).
bool sine_rule_holds(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

struct LatticeCount {
  Integer interior;
  Integer boundary;
};

// Brute force over the bounding box; throws SearchBoundExceeded above 10^6 points.
LatticeCount count_triangle_points(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

// area = I + E/2 - 1 with area = is/2.
bool pick_formula_holds(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

IntVector make_vector(std::initializer_list<long long> xs);
IntMatrix make_columns(std::initializer_list<std::initializer_list<long long>> cols);

}  // namespace itrig
