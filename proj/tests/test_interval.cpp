#include "cutlab/interval.hpp"
#include "cutlab/quadext.hpp"

#include <doctest.h>

using namespace cutlab;

TEST_CASE("sqrt enclosure brackets the root tightly") {
  for (long v : {0L, 1L, 2L, 3L, 7L, 144L}) {
    Interval iv = sqrt_enclosure(Rational(v));
    CHECK(iv.lo * iv.lo <= Rational(v));
    CHECK(iv.hi * iv.hi >= Rational(v));
    CHECK(iv.hi - iv.lo <= Rational(1, 1000000000));
  }
  Interval r = sqrt_enclosure(Rational(9, 4));
  CHECK(r.lo <= Rational(3, 2));
  CHECK(r.hi >= Rational(3, 2));
  CHECK_THROWS(sqrt_enclosure(Rational(-1)));
}

TEST_CASE("ln enclosure matches known digits") {
  // ln 2 = 0.6931471805599453...
  Interval l2 = ln_enclosure(Rational(2));
  CHECK(l2.lo < l2.hi);
  CHECK(l2.lo.approx() == doctest::Approx(0.6931471805599453).epsilon(1e-12));
  CHECK(l2.hi.approx() == doctest::Approx(0.6931471805599453).epsilon(1e-12));
  // ln 16 = 4 ln 2
  Interval l16 = ln_enclosure(Rational(16));
  CHECK(l16.lo <= Rational(4) * l2.hi);
  CHECK(l16.hi >= Rational(4) * l2.lo);
  CHECK(ln_enclosure(Rational(1)).lo == Rational(0));
  CHECK_THROWS(ln_enclosure(Rational(1, 2)));
}

TEST_CASE("interval operations round outward") {
  Interval a{Rational(1, 3), Rational(1, 2)}, b{Rational(-2), Rational(3)};
  Interval p = iv_mul(a, b);
  CHECK(p.lo == Rational(-1));
  CHECK(p.hi == Rational(3, 2));
  Interval m = iv_min(a, b);
  CHECK(m.lo == Rational(-2));
  CHECK(m.hi == Rational(1, 2));
  CHECK(certified_sq_le(Rational(1, 2), Interval{Rational(2), Rational(3)}));
  CHECK(!certified_sq_le(Rational(5), Interval{Rational(2), Rational(3)}));
}

TEST_CASE("quadratic extension sign logic") {
  Rational m(2);  // sqrt(2)
  QuadExt root = QuadExt::root_mult(Rational(1), m);
  CHECK(root.sign() == 1);
  // 3/2 < sqrt(2)? no: sqrt(2) = 1.414... < 3/2
  CHECK(QuadExt::rat(Rational(3, 2), m) > root);
  CHECK(QuadExt::rat(Rational(7, 5), m) < root);   // 1.4 < sqrt 2
  CHECK(QuadExt::rat(Rational(-3), m) < QuadExt::root_mult(Rational(-2), m));
  QuadExt zero = root - root;
  CHECK(zero.sign() == 0);
  // (1 + sqrt2)(1 - sqrt2) = -1
  QuadExt prod = (QuadExt::rat(Rational(1), m) + root) * (QuadExt::rat(Rational(1), m) - root);
  CHECK(prod == QuadExt::rat(Rational(-1), m));
  // perfect square m degenerates gracefully: sqrt(9) = 3
  QuadExt three = QuadExt::root_mult(Rational(1), Rational(9));
  CHECK((three - QuadExt::rat(Rational(3), Rational(9))).sign() == 0);
}
