#pragma once

#include <vector>

#include "itrig/lattice.hpp"

namespace itrig {

// Normalised Hermite form of an ordered cone: grid is the k x k upper triangular block,
// transform the unimodular map with transform * primitive_edges = [grid; 0].
struct ArctanForm {
  IntMatrix grid;
  IntMatrix transform;

  Eigen::Index order() const { return grid.cols(); }
  Eigen::Index dim() const { return transform.cols(); }
  auto last_column() const { return grid.col(grid.cols() - 1); }
};

ArctanForm arctan_form(const Cone& c);

// 1-based accessors, following the usual indexing of the trigonometric functions.
Integer isin(const ArctanForm& f, Eigen::Index i);
Integer icos(const ArctanForm& f, Eigen::Index j, Eigen::Index i);
// First i entries of column i, a primitive vector with positive last entry.
IntVector itan(const ArctanForm& f, Eigen::Index i);
// Product of the diagonal: the index of the edge lattice.
Integer index_of(const ArctanForm& f);

// Every (k-1)-subcone has integer sine 1.
bool is_simple(const Cone& c);

bool congruent(const Cone& a, const Cone& b);

}  // namespace itrig
