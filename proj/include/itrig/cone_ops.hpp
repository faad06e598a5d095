#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "itrig/arctan.hpp"

namespace itrig {

// Bijection of {1..k}; alpha_s has edges (v_{s(1)}, ..., v_{s(k)}).
class Permutation {
 public:
  static Permutation identity(int k);
  // The k-cycle (1,2,...,k).
  static Permutation rotation(int k);
  // Cycle notation "(1,3)(2,4)" or one-line notation "[3,2,1]".
  static Permutation parse(std::string_view text, int k);
  explicit Permutation(std::vector<int> one_line);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_.at(x - 1); }
  const std::vector<int>& one_line() const { return image_; }
  bool is_full_cycle() const;
  std::string str() const;

  // (a * b)(x) = a(b(x))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation pow(int e) const;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

std::vector<Permutation> all_permutations(int k);

struct Check {
  std::string name;
  bool holds = false;
  bool applicable = true;
  std::string details;
};

bool all_hold(const std::vector<Check>& checks);

Cone permute(const Cone& c, const Permutation& s);
// Edge i (1-based) replaced by its negative.
Cone adjacent(const Cone& c, int i);

// icos_{1,k}, ..., icos_{k-1,k}.
std::vector<Integer> last_cosines(const ArctanForm& f);

// Cosines of the last column of alpha_s for a simple cone, from those of alpha:
// with i = s(k), a'_x = a_{s(x)} when i = k, otherwise a'_x = a_i^{-1} if s(x) = k
// and -a_{s(x)} a_i^{-1} else (mod isin_k). Throws CosineNotInvertible.
std::vector<Integer> predicted_permuted_cosines(const ArctanForm& f, const Permutation& s);

Check verify_transpose_relations(const Cone& c, int i, int j);
Check verify_permutation_relations(const Cone& c, const Permutation& s);
std::vector<Check> verify_cycle_products(const Cone& c, const Permutation& tau);
Check verify_adjacent_relations(const Cone& c, int i);

// k x k matrix with entry (r, c) = icos_{(c-r) mod k, k} of alpha_{tau^r}, tau = (1..k), zero diagonal.
IntMatrix special_matrix(const Cone& c);
Check verify_special_determinant(const Cone& c);

struct AlphaCoords {
  std::vector<Integer> coords;  // residues in [0, modulus)
  Integer modulus;
};

// iv * grid^{-1} * (1, ..., 1) reduced modulo iv.
AlphaCoords canonical_point_coords(const Cone& c);
Check verify_canonical_point(const Cone& c);

// Cones at A0 and at A1 of a simplex with unit edges.
std::vector<Check> simplex_partner_check(const Simplex& s);

// Cone with the given grid, placed in the ambient space of `like` through its transform.
Cone cone_from_grid(const Cone& like, const IntMatrix& grid);

Cone euclid_reduce(const Cone& c, int i);
Integer partial_quotient(const Cone& c, int i);

// Negate edge i, then swap edges i and k.
Cone flip(const Cone& c, int i);

// One strong-best-approximation step along edge i (requires icos_{i,k} >= 2).
Cone approximation_step(const Cone& c, int i);

struct SbaNode {
  Cone cone;
  IntMatrix grid;
  std::optional<std::size_t> parent;
  int step = 0;  // index i of the applied step; 0 for a starting permutation
  int depth = 0;
};

// Congruence classes reached from all permutations of c by at most max_steps steps.
std::vector<SbaNode> sba_cones(const Cone& c, int max_steps);

std::vector<Integer> plucker(const ArctanForm& f);
std::vector<Integer> plucker(const Cone& c);
std::vector<Check> verify_plucker_transpose(const Cone& c, int i);

}  // namespace itrig
