#pragma once

#include <vector>

#include "itrig/rational.hpp"

namespace itrig {

using CFSeq = std::vector<Integer>;

enum class Parity { Odd, Even };

// Value of [a0; a1 : ... : an], accumulated as a product of 2x2 integer matrices,
// so zero or negative elements never divide by zero. An empty sequence is infinity.
ProjRat cf_eval(const CFSeq& s);

// Values of all prefixes of s.
std::vector<ProjRat> cf_convergents(const CFSeq& s);

// Regular expansion whose last element exceeds 1 (or has length 1).
CFSeq cf_regular(const Rational& q);

// Regular expansion with an odd or even number of elements.
CFSeq cf_expand(const Rational& q, Parity parity);

}  // namespace itrig
