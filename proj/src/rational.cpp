#include "itrig/rational.hpp"

#include "itrig/arith.hpp"

namespace itrig {

Rational::Rational(Integer n, Integer d) {
  if (d == 0) fail(ErrorKind::NotInvertible, "zero denominator");
  Integer g = gcd(n, d);
  if (d < 0) g = -g;
  num_ = n / g;
  den_ = d / g;
}

Rational Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(s));
  Integer d = Integer::parse(s.substr(slash + 1));
  if (d == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(s) + "'");
  return Rational(Integer::parse(s.substr(0, slash)), d);
}

Integer Rational::floor() const { return floor_div(num_, den_); }

std::string Rational::str() const { return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str(); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

ProjRat::ProjRat(Integer p, Integer q) {
  if (p == 0 && q == 0) fail(ErrorKind::Degenerate, "(0, 0) is not a projective point");
  Integer g = gcd(p, q);
  if (q < 0 || (q == 0 && p < 0)) g = -g;
  p_ = p / g;
  q_ = q / g;
}

Rational ProjRat::value() const {
  if (is_infinite()) fail(ErrorKind::NotInvertible, "value of infinity");
  return Rational(p_, q_);
}

std::string ProjRat::str() const {
  if (is_infinite()) return "inf";
  return q_ == 1 ? p_.str() : p_.str() + "/" + q_.str();
}

}  // namespace itrig
