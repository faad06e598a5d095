#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "itrig/error.hpp"
#include "itrig/integer.hpp"

namespace itrig {

template <class S>
S abs_value(const S& a) {
  return a < S(0) ? S(-a) : a;
}

// Quotient rounded towards minus infinity.
template <class S>
S floor_div(const S& a, const S& b) {
  S q = a / b;
  if (!(a % b == S(0)) && ((a < S(0)) != (b < S(0)))) q = q - S(1);
  return q;
}

// Remainder with the sign of b; for b > 0 the result lies in [0, b).
template <class S>
S floor_mod(const S& a, const S& b) {
  return a - b * floor_div(a, b);
}

template <class S>
struct ExtGcd {
  S g, x, y;
};

// g = gcd(a, b) >= 0 with a*x + b*y = g; gcd(0, 0) = 0.
template <class S>
ExtGcd<S> gcd_ext(const S& a, const S& b) {
  S r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (!(r1 == S(0))) {
    S q = r0 / r1;
    S t = r0 - q * r1; r0 = r1; r1 = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
    t = y0 - q * y1; y0 = y1; y1 = t;
  }
  if (r0 < S(0)) { r0 = -r0; x0 = -x0; y0 = -y0; }
  if (r0 == S(0)) return {S(0), S(0), S(0)};
  return {r0, x0, y0};
}

template <class S>
S gcd(const S& a, const S& b) {
  S x = abs_value(a), y = abs_value(b);
  while (!(y == S(0))) {
    S t = x % y;
    x = y;
    y = t;
  }
  return x;
}

// b in [0, m) with a*b = 1 (mod m); 0 when m = 1.
template <class S>
S mod_inverse(const S& a, const S& m) {
  if (m < S(1)) fail(ErrorKind::NotInvertible, "modulus must be positive");
  if (m == S(1)) return S(0);
  auto e = gcd_ext(floor_mod(a, m), m);
  if (!(e.g == S(1))) fail(ErrorKind::NotInvertible, "gcd of argument and modulus is not 1");
  return floor_mod(e.x, m);
}

// Fraction-free (Bareiss) elimination.
template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  if (m.rows() != m.cols()) fail(ErrorKind::NotSquare, "determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return S(1);
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> a = m;
  S prev = 1;
  bool negate = false;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k) == S(0)) ++p;
    if (p == n) return S(0);
    if (p != k) {
      a.row(p).swap(a.row(k));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return negate ? S(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

template <class Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  S prev = 1;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == S(0)) ++p;
    if (p == rows) continue;
    a.row(p).swap(a.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

namespace detail {
inline bool next_combination(std::vector<Eigen::Index>& idx, Eigen::Index n) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  for (Eigen::Index i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (Eigen::Index j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}
}  // namespace detail

// gcd of all k x k minors.
template <class Derived>
typename Derived::Scalar determinantal_divisor(const Eigen::MatrixBase<Derived>& m, Eigen::Index k) {
  using S = typename Derived::Scalar;
  if (k < 1 || k > std::min(m.rows(), m.cols()))
    fail(ErrorKind::DimensionMismatch, "minor size out of range");
  std::vector<Eigen::Index> rows(k), cols(k);
  S g = 0;
  for (Eigen::Index i = 0; i < k; ++i) rows[i] = i;
  do {
    for (Eigen::Index i = 0; i < k; ++i) cols[i] = i;
    do {
      Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> sub(k, k);
      for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
      g = gcd(g, determinant(sub));
      if (g == S(1)) return g;
    } while (detail::next_combination(cols, m.cols()));
  } while (detail::next_combination(rows, m.rows()));
  if (g == S(0)) fail(ErrorKind::RankDeficient, "all minors vanish");
  return g;
}

}  // namespace itrig
