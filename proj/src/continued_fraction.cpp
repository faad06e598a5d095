#include "itrig/continued_fraction.hpp"

#include "itrig/arith.hpp"

namespace itrig {

std::vector<ProjRat> cf_convergents(const CFSeq& s) {
  std::vector<ProjRat> out;
  out.reserve(s.size());
  // columns (p_k, q_k) and (p_{k-1}, q_{k-1})
  Integer p = 1, q = 0, pp = 0, qq = 1;
  for (const Integer& a : s) {
    Integer np = a * p + pp, nq = a * q + qq;
    pp = std::move(p);
    qq = std::move(q);
    p = std::move(np);
    q = std::move(nq);
    out.emplace_back(p, q);
  }
  return out;
}

ProjRat cf_eval(const CFSeq& s) {
  if (s.empty()) return ProjRat::infinity();
  return cf_convergents(s).back();
}

CFSeq cf_regular(const Rational& q) {
  CFSeq out;
  Integer n = q.num(), d = q.den();
  while (true) {
    Integer a = floor_div(n, d);
    out.push_back(a);
    Integer r = n - a * d;
    if (r == 0) break;
    n = std::move(d);
    d = std::move(r);
  }
  return out;
}

CFSeq cf_expand(const Rational& q, Parity parity) {
  CFSeq out = cf_regular(q);
  const bool odd = out.size() % 2 == 1;
  if (odd == (parity == Parity::Odd)) return out;
  if (out.size() == 1 || out.back() > 1) {
    out.back() -= 1;
    out.emplace_back(1);
  } else {
    out.pop_back();
    out.back() += 1;
  }
  return out;
}

}  // namespace itrig
