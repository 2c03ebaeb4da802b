#pragma once

#include "cutlab/rational.hpp"

namespace cutlab {

// Closed interval with exact rational endpoints, used to round irrational
// quantities (square roots, logarithms) outward. Invariant: lo <= hi.
struct Interval {
  Rational lo, hi;

  static Interval exact(const Rational& q) { return {q, q}; }
  std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
  double mid_approx() const { return (lo.approx() + hi.approx()) / 2.0; }
};

Interval iv_add(const Interval& a, const Interval& b);
Interval iv_sub(const Interval& a, const Interval& b);
Interval iv_mul(const Interval& a, const Interval& b);
Interval iv_scale(const Interval& a, const Rational& s);
Interval iv_min(const Interval& a, const Interval& b);

// Enclosure of sqrt(q), q >= 0. Width <= 1/2^prec_bits relative to the scale of q.
Interval sqrt_enclosure(const Rational& q, unsigned prec_bits = 96);

// Enclosure of ln(x) for rational x >= 1 (atanh series after range reduction to [1,2)).
Interval ln_enclosure(const Rational& x, unsigned terms = 40);

// True if provably x^2 <= iv holds for the nonnegative real with square sq_x,
// i.e. sq_x <= lo^2. Used for "sqrt(d) <= bound" checks without leaving Q.
bool certified_sq_le(const Rational& sq_x, const Interval& bound);

}  // namespace cutlab
