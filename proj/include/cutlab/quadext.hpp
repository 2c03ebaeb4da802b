#pragma once

#include "cutlab/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace cutlab {

// Element a + b*sqrt(m) of the quadratic extension Q(sqrt(m)), m >= 0 rational.
// Exact arithmetic and sign determination; all values in one computation must
// share the same m. Used to verify sparsified cuts whose coefficients mix
// rationals with multiples of sqrt(n * lambda^2).
struct QuadExt {
  Rational a, b, m;

  static QuadExt rat(const Rational& a, const Rational& m) { return {a, Rational(0), m}; }
  static QuadExt root_mult(const Rational& b, const Rational& m) { return {Rational(0), b, m}; }

  QuadExt operator+(const QuadExt& o) const { check(o); return {a + o.a, b + o.b, m}; }
  QuadExt operator-(const QuadExt& o) const { check(o); return {a - o.a, b - o.b, m}; }
  QuadExt operator*(const QuadExt& o) const {
    check(o);
    return {a * o.a + b * o.b * m, a * o.b + b * o.a, m};
  }
  QuadExt scaled(const Rational& s) const { return {a * s, b * s, m}; }

  // sign of a + b*sqrt(m); resolves the mixed-sign case by comparing squares.
  int sign() const {
    if (m.is_zero() || b.is_zero()) return a.sign();
    if (a.is_zero()) return b.sign();
    if (a.sign() > 0 && b.sign() > 0) return 1;
    if (a.sign() < 0 && b.sign() < 0) return -1;
    Rational asq = a * a, bsqm = b * b * m;
    if (a.sign() > 0) return asq > bsqm ? 1 : (asq == bsqm ? 0 : -1);
    return bsqm > asq ? 1 : (bsqm == asq ? 0 : -1);
  }

  bool operator<(const QuadExt& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const QuadExt& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const QuadExt& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const QuadExt& o) const { return (*this - o).sign() >= 0; }
  bool operator==(const QuadExt& o) const { return (*this - o).sign() == 0; }

  double approx() const { return a.approx() + b.approx() * std::sqrt(m.approx()); }

 private:
  void check(const QuadExt& o) const {
    if (m != o.m) throw std::invalid_argument("QuadExt: mixed extensions");
  }
};

}  // namespace cutlab
