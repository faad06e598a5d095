#include "itrig/trig2d.hpp"

#include <algorithm>

#include "itrig/arith.hpp"

namespace itrig {

namespace {

IntVector vec2(const Integer& x, const Integer& y) {
  IntVector v(2);
  v << x, y;
  return v;
}

Integer cross(const IntVector& u, const IntVector& v) { return u(0) * v(1) - u(1) * v(0); }

// (isin, icos entry) of the 2x2 grid.
std::pair<Integer, Integer> grid_of(const Angle2D& a) {
  const auto f = arctan_form(a.cone());
  return {f.grid(1, 1), f.grid(0, 1)};
}

}  // namespace

Angle2D::Angle2D(Cone c) : cone_(std::move(c)) {
  if (cone_->dim() != 2 || cone_->order() != 2) fail(ErrorKind::DimensionMismatch, "planar angle needs two edges in R^2");
}

Angle2D Angle2D::from_rays(const IntVector& u, const IntVector& w) {
  if (u.size() != 2 || w.size() != 2) fail(ErrorKind::DimensionMismatch, "planar rays expected");
  if (u.isZero() || w.isZero()) fail(ErrorKind::ZeroVector, "ray with zero direction");
  if (cross(u, w) == 0) {
    if (u.dot(w) > 0) return trivial();
    fail(ErrorKind::StraightAngle, "opposite rays form a straight angle");
  }
  IntMatrix m(2, 2);
  m.col(0) = u;
  m.col(1) = w;
  return Angle2D(Cone(std::move(m)));
}

Angle2D Angle2D::from_grid(const Integer& isin, const Integer& icos) {
  return from_rays(vec2(1, 0), vec2(icos, isin));
}

const Cone& Angle2D::cone() const {
  if (!cone_) fail(ErrorKind::TrivialAngle, "the trivial angle has no edges");
  return *cone_;
}

Angle2D iarctan2(const Rational& q) {
  if (q.sign() <= 0) fail(ErrorKind::NonPositive, "integer arctangent needs a positive rational");
  const Integer& m = q.num();
  const Integer& n = q.den();
  if (m >= n) return Angle2D::from_grid(m, n);
  // shear (x, y) -> (x - t y, y) to a representative with the cosine in (0, m]
  Integer c = floor_mod(n, m);
  return Angle2D::from_grid(m, c == 0 ? m : c);
}

std::vector<LatticePoint> sail(const Angle2D& a) {
  const Cone& c = a.cone();
  const auto f = arctan_form(c);
  const Integer s = f.grid(1, 1), cs = f.grid(0, 1);
  std::vector<IntVector> canon{vec2(1, 0)};
  if (s == 1) {
    canon.push_back(vec2(cs, 1));
  } else {
    const auto conv = cf_convergents(cf_expand(Rational(s, cs), Parity::Odd));
    for (std::size_t i = 0; i < conv.size(); i += 2) canon.push_back(vec2(conv[i].q(), conv[i].p()));
  }
  const IntMatrix& t = f.transform;
  const Integer det = t(0, 0) * t(1, 1) - t(0, 1) * t(1, 0);
  IntMatrix inv(2, 2);
  inv << t(1, 1) * det, -t(0, 1) * det, -t(1, 0) * det, t(0, 0) * det;
  std::vector<LatticePoint> out;
  out.reserve(canon.size());
  for (const auto& p : canon) out.push_back(c.vertex() + inv * p);
  return out;
}

CFSeq lls(const Angle2D& a) {
  const auto pts = sail(a);
  CFSeq out;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (i > 0) {
      const IntVector back = primitive(pts[i - 1] - pts[i]).unit;
      const IntVector fwd = primitive(pts[i + 1] - pts[i]).unit;
      out.push_back(abs(cross(back, fwd)));
    }
    out.push_back(integer_length(pts[i], pts[i + 1]));
  }
  return out;
}

Rational itan2(const Angle2D& a) {
  if (a.is_trivial()) return 0;
  auto [s, c] = grid_of(a);
  if (c == 0) return cf_eval(lls(a)).value();
  return Rational(s, c);
}

Integer isin2(const Angle2D& a) {
  if (a.is_trivial()) return 0;
  return grid_of(a).first;
}

Integer icos2(const Angle2D& a) {
  if (a.is_trivial()) return 1;
  auto [s, c] = grid_of(a);
  return s == 1 ? Integer(1) : c;
}

bool congruent2(const Angle2D& a, const Angle2D& b) {
  if (a.is_trivial() || b.is_trivial()) return a.is_trivial() == b.is_trivial();
  return grid_of(a) == grid_of(b);
}

Angle2D transpose2(const Angle2D& a) {
  const Cone& c = a.cone();
  IntMatrix m(2, 2);
  m.col(0) = c.edge(1);
  m.col(1) = c.edge(0);
  return Angle2D(c.with_edges(std::move(m)));
}

Angle2D adjacent2(const Angle2D& a) {
  const Cone& c = a.cone();
  IntMatrix m(2, 2);
  m.col(0) = c.edge(1);
  m.col(1) = -c.edge(0);
  return Angle2D(c.with_edges(std::move(m)));
}

AngleSum angle_sum(const Angle2D& a, const Angle2D& b, const Integer& separator) {
  CFSeq seq = lls(a);
  seq.push_back(separator);
  const CFSeq tail = lls(b);
  seq.insert(seq.end(), tail.begin(), tail.end());
  ProjRat v = cf_eval(seq);
  std::optional<Angle2D> angle;
  if (!v.is_infinite() && v.p() > 0) angle = iarctan2(v.value());
  return {std::move(seq), std::move(v), std::move(angle)};
}

ProjRat bracket_eval(const std::vector<Rational>& tangents, const std::vector<Integer>& separators) {
  if (tangents.empty() || separators.size() + 1 != tangents.size())
    fail(ErrorKind::SizeMismatch, "need exactly one separator between consecutive tangents");
  CFSeq seq;
  for (std::size_t i = 0; i < tangents.size(); ++i) {
    if (tangents[i] < 1)
      fail(ErrorKind::NonPositiveTangent, "tangent " + tangents[i].str() + " has a zero partial quotient");
    const CFSeq part = cf_expand(tangents[i], Parity::Odd);
    seq.insert(seq.end(), part.begin(), part.end());
    if (i < separators.size()) seq.push_back(separators[i]);
  }
  return cf_eval(seq);
}

TriangleVerdict triangle_exists(const std::vector<Rational>& tangents) {
  if (tangents.size() != 3) fail(ErrorKind::SizeMismatch, "a triangle has three angles");
  std::array<int, 3> ord{0, 1, 2};
  TriangleVerdict first;
  bool have_first = false;
  do {
    const Rational& ta = tangents[ord[0]];
    const Rational& tb = tangents[ord[1]];
    const Rational& tc = tangents[ord[2]];
    ProjRat whole = bracket_eval({ta, tb, tc}, {-1, -1});
    ProjRat part = bracket_eval({ta, tb}, {-1});
    TriangleVerdict v{false, ord, whole, part};
    if (whole.p() == 0 && whole.q() != 0) {
      // infinity lies outside every bounded interval
      const bool inside = !part.is_infinite() && part.value() >= 0 && part.value() <= ta;
      v.exists = !inside;
    }
    if (v.exists) return v;
    if (!have_first) {
      first = v;
      have_first = true;
    }
  } while (std::next_permutation(ord.begin(), ord.end()));
  return first;
}

TriangleVerdict triangle_exists(const Angle2D& a, const Angle2D& b, const Angle2D& c) {
  if (a.is_trivial() || b.is_trivial() || c.is_trivial()) fail(ErrorKind::TrivialAngle, "triangle angles are non-trivial");
  return triangle_exists(std::vector<Rational>{itan2(a), itan2(b), itan2(c)});
}

std::vector<Rational> sba_classical(const Rational& q) {
  const CFSeq a = cf_regular(q);
  const auto conv = cf_convergents(a);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < conv.size(); ++i) out.push_back(conv[i].value());
  // a0 loses to a0 + 1 when a1 = 1 and ties with it when q = a0 + 1/2
  if (a.size() >= 2 && (a[1] == 1 || (a.size() == 2 && a[1] == 2))) out.erase(out.begin());
  return out;
}

std::vector<Rational> sba_oracle(const Rational& q) {
  std::vector<Rational> out;
  std::optional<Rational> best;
  for (Integer d = 1; d <= q.den(); d += 1) {
    const Rational x = q * Rational(d);
    const Integer p = x.floor();
    const Rational below = x - Rational(p), above = Rational(p + 1) - x;
    const bool tie = below == above;
    const Rational err = std::min(below, above);
    if (best && err >= *best) continue;
    if (!tie) out.emplace_back(below < above ? p : Integer(p + 1), d);
    best = err;
  }
  return out;
}

Angle2D euclid_reduce2(const Angle2D& a) {
  auto [s, c] = grid_of(a);
  if (c == 0) fail(ErrorKind::ZeroCosine, "Euclidean reduction by a zero cosine");
  return Angle2D::from_grid(c, floor_mod(s, c));
}

std::optional<Integer> partial_quotient2(const Angle2D& a) {
  auto [s, c] = grid_of(a);
  if (c == 0) return std::nullopt;
  return floor_div(s, c);
}

Angle2D approximation_step2(const Angle2D& a) {
  if (isin2(a) == 1) fail(ErrorKind::NoReduction, "iarctan 1 has no previous approximation");
  const Angle2D t = transpose2(a);
  const Angle2D adj = adjacent2(a);
  auto exceeds_one = [](const Angle2D& x) {
    auto pq = partial_quotient2(x);
    return pq && *pq > 1;
  };
  std::optional<Angle2D> r1, r2;
  if (exceeds_one(t)) r1 = adjacent2(euclid_reduce2(t));
  if (exceeds_one(adj)) r2 = transpose2(euclid_reduce2(adj));
  if (r1 && r2) {
    if (!congruent2(*r1, *r2)) fail(ErrorKind::BranchAmbiguity, "both reduction branches apply and disagree");
    return *r1;
  }
  if (r1) return *r1;
  if (r2) return *r2;
  fail(ErrorKind::BranchAmbiguity, "no reduction branch applies");
}

std::vector<Rational> approximation_chain2(const Angle2D& a) {
  std::vector<Rational> out{itan2(a)};
  Angle2D cur = a;
  while (isin2(cur) != 1) {
    cur = approximation_step2(cur);
    out.push_back(itan2(cur));
  }
  return out;
}

bool is_right_angle2(const Angle2D& a) {
  return congruent2(a, transpose2(a)) && congruent2(a, adjacent2(a));
}

}  // namespace itrig
