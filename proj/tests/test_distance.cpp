#include "cutlab/polytope.hpp"

#include "cutlab/error.hpp"
#include "cutlab/rng.hpp"

#include <doctest.h>

using namespace cutlab;

namespace {

QVec pt(std::vector<Rational> v) { return v; }

VPolytope vp(int dim, std::vector<QVec> points) {
  VPolytope v;
  v.dim = dim;
  v.points = std::move(points);
  return v;
}

}  // namespace

TEST_CASE("distance to a segment") {
  VPolytope seg = vp(2, {pt({Rational(0), Rational(1)}), pt({Rational(1), Rational(0)})});
  DistanceResult d = sq_distance(pt({Rational(1), Rational(1)}), seg);
  CHECK(d.sq_dist == Rational(1, 2));
  CHECK(d.nearest == pt({Rational(1, 2), Rational(1, 2)}));

  // nearest point clamps to an endpoint outside the segment's span
  d = sq_distance(pt({Rational(3), Rational(0)}), seg);
  CHECK(d.sq_dist == Rational(4));
  CHECK(d.nearest == pt({Rational(1), Rational(0)}));
}

TEST_CASE("distance is zero exactly on the hull") {
  VPolytope tri = vp(2, {pt({Rational(0), Rational(0)}), pt({Rational(2), Rational(0)}),
                         pt({Rational(0), Rational(2)})});
  CHECK(sq_distance(pt({Rational(1, 2), Rational(1, 2)}), tri).sq_dist == Rational(0));
  CHECK(sq_distance(pt({Rational(0), Rational(0)}), tri).sq_dist == Rational(0));
  CHECK(sq_distance(pt({Rational(2), Rational(2)}), tri).sq_dist == Rational(2));
}

TEST_CASE("distance to a single point") {
  VPolytope one = vp(3, {pt({Rational(1), Rational(2), Rational(3)})});
  DistanceResult d = sq_distance(pt({Rational(0), Rational(0), Rational(0)}), one);
  CHECK(d.sq_dist == Rational(14));
  CHECK(d.nearest == one.points[0]);
}

TEST_CASE("distance respects the vertex-count cap") {
  VPolytope many;
  many.dim = 1;
  for (int i = 0; i < 13; ++i) many.points.push_back(pt({Rational(i)}));
  CHECK_THROWS_AS(sq_distance(pt({Rational(0)}), many), Error);
}

TEST_CASE("zero distance agrees with membership on random data") {
  Rng rng(911);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng.below(2));
    int t = 2 + static_cast<int>(rng.below(4));
    VPolytope v;
    v.dim = n;
    for (int i = 0; i < t; ++i) {
      QVec p;
      for (int j = 0; j < n; ++j) p.push_back(Rational(rng.range(-3, 3), rng.range(1, 3)));
      v.points.push_back(p);
    }
    QVec x;
    for (int j = 0; j < n; ++j) x.push_back(Rational(rng.range(-3, 3), rng.range(1, 3)));
    DistanceResult d = sq_distance(x, v);
    CHECK((d.sq_dist == Rational(0)) == hull_contains(v, x));
    CHECK(hull_contains(v, d.nearest));
    // the certificate direction also bounds every vertex distance
    for (const QVec& p : v.points) {
      QVec diff = sub(x, p);
      CHECK(d.sq_dist <= sq_norm(diff));
    }
  }
}
