#pragma once

#include <array>
#include <optional>
#include <vector>

#include "itrig/arctan.hpp"
#include "itrig/continued_fraction.hpp"

namespace itrig {

// Planar angle at a lattice vertex; the trivial (zero) angle carries no cone.
class Angle2D {
 public:
  explicit Angle2D(Cone c);
  static Angle2D trivial() { return Angle2D(); }
  // Angle between two rays from the origin; coincident rays give the trivial angle.
  static Angle2D from_rays(const IntVector& u, const IntVector& w);
  // Angle with edges (1,0) and (icos, isin).
  static Angle2D from_grid(const Integer& isin, const Integer& icos);

  bool is_trivial() const { return !cone_.has_value(); }
  const Cone& cone() const;

 private:
  Angle2D() = default;
  std::optional<Cone> cone_;
};

Angle2D iarctan2(const Rational& q);

// Sail vertices from the primitive point on the first edge to the one on the second.
std::vector<LatticePoint> sail(const Angle2D& a);
CFSeq lls(const Angle2D& a);

Rational itan2(const Angle2D& a);
Integer isin2(const Angle2D& a);
Integer icos2(const Angle2D& a);

bool congruent2(const Angle2D& a, const Angle2D& b);

Angle2D transpose2(const Angle2D& a);
Angle2D adjacent2(const Angle2D& a);

struct AngleSum {
  CFSeq sequence;
  ProjRat value;
  std::optional<Angle2D> angle;  // present when the value is finite and positive
};
AngleSum angle_sum(const Angle2D& a, const Angle2D& b, const Integer& separator);

// ]q1 : s1 : q2 : ... : qk[ with each q expanded to its odd regular continued fraction.
ProjRat bracket_eval(const std::vector<Rational>& tangents, const std::vector<Integer>& separators);

struct TriangleVerdict {
  bool exists = false;
  std::array<int, 3> ordering{0, 1, 2};  // indices into the input, first satisfying ordering
  std::optional<ProjRat> bracket;        // ]a:-1:b:-1:c[ for that ordering
  std::optional<ProjRat> partial;        // ]a:-1:b[
};
TriangleVerdict triangle_exists(const std::vector<Rational>& tangents);
TriangleVerdict triangle_exists(const Angle2D& a, const Angle2D& b, const Angle2D& c);

std::vector<Rational> sba_classical(const Rational& q);
std::vector<Rational> sba_oracle(const Rational& q);

// Grid of the first Euclidean reduction: (isin, icos) -> (icos, isin mod icos).
Angle2D euclid_reduce2(const Angle2D& a);
// floor(isin / icos); nullopt for iarctan 1 where the cosine entry is 0.
std::optional<Integer> partial_quotient2(const Angle2D& a);

// One step towards the previous strong best approximation of the tangent.
Angle2D approximation_step2(const Angle2D& a);
// Tangents along repeated steps until iarctan 1.
std::vector<Rational> approximation_chain2(const Angle2D& a);

bool is_right_angle2(const Angle2D& a);

}  // namespace itrig
