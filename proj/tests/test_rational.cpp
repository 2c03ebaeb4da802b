#include "cutlab/rational.hpp"

#include <doctest.h>

using namespace cutlab;

TEST_CASE("rational canonical form") {
  Rational a(6, 4);
  CHECK(a.num() == 3);
  CHECK(a.den() == 2);
  Rational b(-6, 4);
  CHECK(b.num() == -3);
  CHECK(b.den() == 2);
  Rational c(3, -2);  // denominator made positive
  CHECK(c.num() == -3);
  CHECK(c.den() == 2);
  CHECK(Rational(0, 5) == Rational(0));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational arithmetic stays exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK_THROWS(a / Rational(0));
  // no drift over many operations
  Rational s;
  for (int i = 0; i < 100; ++i) s += Rational(1, 100);
  CHECK(s == Rational(1));
}

TEST_CASE("floor ceil frac") {
  CHECK(floor(Rational(13, 5)) == Rational(2));
  CHECK(frac(Rational(13, 5)) == Rational(3, 5));
  CHECK(frac(Rational(-1, 4)) == Rational(3, 4));
  CHECK(floor(Rational(-1, 4)) == Rational(-1));
  CHECK(ceil(Rational(-1, 4)) == Rational(0));
  CHECK(ceil(Rational(5, 2)) == Rational(3));
  CHECK(frac(Rational(7)) == Rational(0));
  for (long p = -12; p <= 12; ++p)
    for (long q = 1; q <= 5; ++q) {
      Rational x(p, q), f = frac(x);
      CHECK(f >= Rational(0));
      CHECK(f < Rational(1));
      CHECK((x - f).is_integer());
    }
}

TEST_CASE("parse and print round-trip") {
  CHECK(Rational::parse("5/2") == Rational(5, 2));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-0") == Rational(0));
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational(5, 2).str() == "5/2");
  CHECK(Rational(-7).str() == "-7");
  CHECK(Rational(4, 2).str() == "2");
  for (const char* bad : {"", "1/", "/2", "a", "1.5", "1/0", "2/-3", "--1"})
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("vector helpers") {
  QVec a{Rational(1), Rational(2)}, b{Rational(3), Rational(-1)};
  CHECK(dot(a, b) == Rational(1));
  CHECK(sq_norm(a) == Rational(5));
  CHECK(support_size(QVec{Rational(0), Rational(4), Rational(0)}) == 1);
  CHECK(add(a, b) == QVec{Rational(4), Rational(1)});
  CHECK(sub(a, b) == QVec{Rational(-2), Rational(3)});
  CHECK(scale(a, Rational(1, 2)) == QVec{Rational(1, 2), Rational(1)});
}
