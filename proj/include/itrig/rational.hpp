#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "itrig/integer.hpp"

namespace itrig {

// Exact rational, always reduced with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Rational(T n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer n, Integer d);

  static Rational parse(std::string_view s);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }
  Integer floor() const;
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  Integer num_, den_;
};

Rational abs(const Rational& q);

// Point of the projective line over Q: the class of (p, q) up to scaling.
// Stored with gcd 1 and q >= 0; infinity is (1, 0).
class ProjRat {
 public:
  ProjRat(Integer p, Integer q);
  ProjRat(const Rational& r) : p_(r.num()), q_(r.den()) {}  // NOLINT(google-explicit-constructor)
  static ProjRat infinity() { return ProjRat(1, 0); }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  bool is_infinite() const { return q_ == 0; }
  Rational value() const;  // throws for infinity
  std::string str() const;

  friend bool operator==(const ProjRat&, const ProjRat&) = default;
  friend std::ostream& operator<<(std::ostream& os, const ProjRat& x) { return os << x.str(); }

 private:
  Integer p_, q_;
};

}  // namespace itrig
