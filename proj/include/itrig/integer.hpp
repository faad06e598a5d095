#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include "itrig/error.hpp"

namespace itrig {

// Arbitrary precision signed integer. A thin value wrapper so that it can be used
// as an Eigen scalar; '/' and '%' truncate like the builtin types.
class Integer {
 public:
  using Rep = boost::multiprecision::cpp_int;

  Integer() = default;
  template <std::integral T>
  Integer(T v) : rep_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Integer(Rep r) : rep_(std::move(r)) {}

  static Integer parse(std::string_view s);

  const Rep& rep() const noexcept { return rep_; }
  std::string str() const { return rep_.str(); }
  int sign() const { return rep_.sign(); }
  bool is_zero() const { return rep_.is_zero(); }

  template <std::integral T>
  T to() const {
    if (rep_ < std::numeric_limits<T>::min() || rep_ > std::numeric_limits<T>::max())
      fail(ErrorKind::DimensionMismatch, "integer " + str() + " does not fit");
    return static_cast<T>(rep_);
  }

  Integer& operator+=(const Integer& o) { rep_ += o.rep_; return *this; }
  Integer& operator-=(const Integer& o) { rep_ -= o.rep_; return *this; }
  Integer& operator*=(const Integer& o) { rep_ *= o.rep_; return *this; }
  Integer& operator/=(const Integer& o) { rep_ /= o.rep_; return *this; }
  Integer& operator%=(const Integer& o) { rep_ %= o.rep_; return *this; }

  Integer operator-() const { return Integer(Rep(-rep_)); }
  Integer operator+() const { return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

  friend bool operator==(const Integer& a, const Integer& b) { return a.rep_ == b.rep_; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    int c = a.rep_.compare(b.rep_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& x) { return os << x.rep_; }

 private:
  Rep rep_;
};

inline Integer Integer::parse(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (body.empty()) fail(ErrorKind::ParseError, "empty integer");
  for (char c : body)
    if (c < '0' || c > '9') fail(ErrorKind::ParseError, "bad integer '" + std::string(s) + "'");
  Rep r{std::string(body)};
  if (s.front() == '-') r = -r;
  return Integer(std::move(r));
}

inline Integer abs(const Integer& x) { return x.sign() < 0 ? -x : x; }

}  // namespace itrig

namespace Eigen {
template <>
struct NumTraits<itrig::Integer> : GenericNumTraits<itrig::Integer> {
  using Real = itrig::Integer;
  using NonInteger = itrig::Integer;
  using Literal = itrig::Integer;
  using Nested = itrig::Integer;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static int digits10() { return 0; }
  static itrig::Integer epsilon() { return 0; }
  static itrig::Integer dummy_precision() { return 0; }
};
}  // namespace Eigen

namespace itrig {

using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

}  // namespace itrig
