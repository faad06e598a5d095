#pragma once

#include <Eigen/Core>

#include "itrig/arith.hpp"

namespace itrig {

template <class S>
struct HermiteForm {
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> form;       // n x k, upper triangular on top
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> transform;  // n x n, unimodular
};

// Row-style Hermite normal form of an n x k matrix of full column rank:
// transform * m = form, with positive pivots on the diagonal, zeros below it and
// entries above each pivot reduced into [0, pivot). Columns are never reordered.
template <class Derived>
HermiteForm<typename Derived::Scalar> row_hermite_form(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = m.rows(), k = m.cols();
  if (k > n) fail(ErrorKind::DegenerateCone, "more columns than rows");
  Mat a = m;
  Mat u = Mat::Identity(n, n);

  // Replaces rows (i, r) by ((x, y), (-b/g, a/g)) applied to them; determinant 1.
  auto combine = [](Mat& mat, Eigen::Index i, Eigen::Index r, const S& x, const S& y, const S& p, const S& q) {
    for (Eigen::Index c = 0; c < mat.cols(); ++c) {
      S top = x * mat(i, c) + y * mat(r, c);
      S bot = p * mat(i, c) + q * mat(r, c);
      mat(i, c) = std::move(top);
      mat(r, c) = std::move(bot);
    }
  };

  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index r = i + 1; r < n; ++r) {
      if (a(r, i) == S(0)) continue;
      S pa = a(i, i), pb = a(r, i);
      auto e = gcd_ext(pa, pb);
      S p = -(pb / e.g), q = pa / e.g;
      combine(a, i, r, e.x, e.y, p, q);
      combine(u, i, r, e.x, e.y, p, q);
    }
    if (a(i, i) == S(0)) fail(ErrorKind::DegenerateCone, "columns are linearly dependent");
    if (a(i, i) < S(0)) {
      a.row(i) = -a.row(i);
      u.row(i) = -u.row(i);
    }
    for (Eigen::Index r = 0; r < i; ++r) {
      S f = floor_div(a(r, i), a(i, i));
      if (f == S(0)) continue;
      a.row(r) -= f * a.row(i);
      u.row(r) -= f * u.row(i);
    }
  }
  return {std::move(a), std::move(u)};
}

}  // namespace itrig
