#include "itrig/arctan.hpp"

#include <string>

#include "itrig/hermite.hpp"

namespace itrig {

namespace {

void check_index(const ArctanForm& f, Eigen::Index i) {
  if (i < 1 || i > f.order())
    fail(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " outside 1.." + std::to_string(f.order()));
}

}  // namespace

ArctanForm arctan_form(const Cone& c) {
  auto h = row_hermite_form(c.primitive_edges());
  const Eigen::Index k = c.order();
  return {h.form.topRows(k), std::move(h.transform)};
}

Integer isin(const ArctanForm& f, Eigen::Index i) {
  check_index(f, i);
  return f.grid(i - 1, i - 1);
}

Integer icos(const ArctanForm& f, Eigen::Index j, Eigen::Index i) {
  check_index(f, i);
  check_index(f, j);
  if (j >= i) fail(ErrorKind::IndexOutOfRange, "cosine index pair needs j < i");
  return f.grid(j - 1, i - 1);
}

IntVector itan(const ArctanForm& f, Eigen::Index i) {
  check_index(f, i);
  return f.grid.col(i - 1).head(i);
}

Integer index_of(const ArctanForm& f) {
  Integer p = 1;
  for (Eigen::Index i = 0; i < f.order(); ++i) p *= f.grid(i, i);
  return p;
}

bool is_simple(const Cone& c) {
  const Eigen::Index k = c.order();
  if (k <= 2) return true;
  for (Eigen::Index skip = 0; skip < k; ++skip) {
    IntMatrix sub(c.dim(), k - 1);
    for (Eigen::Index i = 0, j = 0; i < k; ++i)
      if (i != skip) sub.col(j++) = c.edge(i);
    if (integer_sine(c.with_edges(std::move(sub))) != 1) return false;
  }
  return true;
}

bool congruent(const Cone& a, const Cone& b) {
  if (a.order() != b.order() || a.dim() != b.dim())
    fail(ErrorKind::DimensionMismatch, "cones of different order or dimension");
  return arctan_form(a).grid == arctan_form(b).grid;
}

}  // namespace itrig
