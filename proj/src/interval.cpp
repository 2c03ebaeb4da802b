#include "cutlab/interval.hpp"

#include <stdexcept>

namespace cutlab {

Interval iv_add(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval iv_sub(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval iv_mul(const Interval& a, const Interval& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  Rational lo = c[0], hi = c[0];
  for (int i = 1; i < 4; ++i) {
    if (c[i] < lo) lo = c[i];
    if (c[i] > hi) hi = c[i];
  }
  return {lo, hi};
}

Interval iv_scale(const Interval& a, const Rational& s) {
  if (s.sign() >= 0) return {a.lo * s, a.hi * s};
  return {a.hi * s, a.lo * s};
}

Interval iv_min(const Interval& a, const Interval& b) {
  return {min(a.lo, b.lo), min(a.hi, b.hi)};
}

Interval sqrt_enclosure(const Rational& q, unsigned prec_bits) {
  if (q.sign() < 0) throw std::domain_error("sqrt_enclosure of negative value");
  if (q.is_zero()) return Interval::exact(Rational(0));
  // sqrt(a/b) = sqrt(a*b)/b; floor-sqrt of a*b*4^P brackets within 1/2^P.
  mpz_class a = q.num(), b = q.den();
  mpz_class n = a * b;
  mpz_class scaled = n << (2 * prec_bits);
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  mpz_class den = b << prec_bits;
  return {Rational(root, den), Rational(root + 1, den)};
}

namespace {

// 2*atanh(z) = 2*sum z^(2j+1)/(2j+1) for z in [0, 1/3]; tail bounded by the
// geometric series with ratio z^2 <= 1/9.
Interval two_atanh(const Rational& z, unsigned terms) {
  Rational sum(0), zsq = z * z, pow = z;
  unsigned j = 0;
  for (; j < terms; ++j) {
    sum += pow / Rational(2 * static_cast<long>(j) + 1);
    pow *= zsq;
  }
  Rational tail = pow / Rational(2 * static_cast<long>(j) + 1) * Rational(9, 8);
  return {sum * Rational(2), (sum + tail) * Rational(2)};
}

}  // namespace

Interval ln_enclosure(const Rational& x, unsigned terms) {
  if (x < Rational(1)) throw std::domain_error("ln_enclosure requires x >= 1");
  long s = 0;
  Rational r = x;
  while (r >= Rational(2)) {
    r /= Rational(2);
    ++s;
  }
  Interval ln2 = two_atanh(Rational(1, 3), terms);
  // z = (r-1)/(r+1) in [0, 1/3) for r in [1, 2).
  Interval lnr = two_atanh((r - Rational(1)) / (r + Rational(1)), terms);
  return iv_add(iv_scale(ln2, Rational(s)), lnr);
}

bool certified_sq_le(const Rational& sq_x, const Interval& bound) {
  if (bound.lo.sign() < 0) return false;
  return sq_x <= bound.lo * bound.lo;
}

}  // namespace cutlab
