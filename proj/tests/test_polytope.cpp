#include "cutlab/polytope.hpp"

#include "cutlab/error.hpp"
#include "cutlab/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace cutlab;

namespace {

LinearRow row(std::vector<long> coeffs, Sense s, Rational rhs) {
  LinearRow r;
  for (long c : coeffs) r.coeffs.push_back(Rational(c));
  r.sense = s;
  r.rhs = rhs;
  return r;
}

QVec pt(std::vector<Rational> v) { return v; }

bool same_points(std::vector<QVec> a, std::vector<QVec> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

HPolytope with_nonneg(HPolytope p) {
  for (int j = 0; j < p.dim; ++j) {
    QVec e(p.dim);
    e[j] = Rational(1);
    LinearRow r;
    r.coeffs = e;
    r.sense = Sense::ge;
    r.rhs = Rational(0);
    p.rows.push_back(r);
  }
  return p;
}

}  // namespace

TEST_CASE("vertices of the scaled simplex") {
  HPolytope p;
  p.dim = 2;
  p.rows.push_back(row({2, 2}, Sense::le, Rational(3)));
  VPolytope v = enumerate_vertices(with_nonneg(p));
  CHECK(same_points(v.points, {pt({Rational(0), Rational(0)}), pt({Rational(3, 2), Rational(0)}),
                               pt({Rational(0), Rational(3, 2)})}));
}

TEST_CASE("vertex enumeration handles equalities, emptiness, caps") {
  HPolytope seg;
  seg.dim = 2;
  seg.rows.push_back(row({1, 1}, Sense::eq, Rational(1)));
  seg.rows.push_back(row({1, 0}, Sense::ge, Rational(0)));
  seg.rows.push_back(row({0, 1}, Sense::ge, Rational(0)));
  VPolytope v = enumerate_vertices(seg);
  CHECK(same_points(v.points, {pt({Rational(1), Rational(0)}), pt({Rational(0), Rational(1)})}));

  HPolytope empty;
  empty.dim = 2;
  empty.rows.push_back(row({1, 0}, Sense::le, Rational(-1)));
  empty.rows.push_back(row({1, 0}, Sense::ge, Rational(0)));
  empty.rows.push_back(row({0, 1}, Sense::eq, Rational(0)));
  empty.rows.push_back(row({0, 1}, Sense::ge, Rational(0)));
  CHECK(enumerate_vertices(empty).points.empty());

  HPolytope unbounded;
  unbounded.dim = 1;
  unbounded.rows.push_back(row({1}, Sense::ge, Rational(0)));
  CHECK_THROWS_AS(enumerate_vertices(unbounded), Error);

  HPolytope big;
  big.dim = 11;
  CHECK_THROWS_AS(enumerate_vertices(big), Error);

  HPolytope point;  // single point via equalities
  point.dim = 2;
  point.rows.push_back(row({1, 0}, Sense::eq, Rational(2)));
  point.rows.push_back(row({0, 1}, Sense::eq, Rational(3)));
  v = enumerate_vertices(point);
  CHECK(same_points(v.points, {pt({Rational(2), Rational(3)})}));
}

TEST_CASE("canonicalize keeps exactly the hull vertices") {
  // (1, 3/2) sits on the segment (0, 5/2) .. (2, 1/2)
  VPolytope v;
  v.dim = 2;
  v.points = {pt({Rational(0), Rational(5, 2)}), pt({Rational(1), Rational(3, 2)}),
              pt({Rational(2), Rational(1, 2)}), pt({Rational(0), Rational(5, 2)})};
  VPolytope c = canonicalize(v);
  CHECK(same_points(c.points, {pt({Rational(0), Rational(5, 2)}), pt({Rational(2), Rational(1, 2)})}));

  // lattice square with interior and edge points
  VPolytope sq;
  sq.dim = 2;
  for (long x = 0; x <= 2; ++x)
    for (long y = 0; y <= 2; ++y) sq.points.push_back(pt({Rational(x), Rational(y)}));
  c = canonicalize(sq);
  CHECK(same_points(c.points, {pt({Rational(0), Rational(0)}), pt({Rational(2), Rational(0)}),
                               pt({Rational(0), Rational(2)}), pt({Rational(2), Rational(2)})}));
}

TEST_CASE("hull membership") {
  VPolytope seg;
  seg.dim = 2;
  seg.points = {pt({Rational(0), Rational(1)}), pt({Rational(1), Rational(0)})};
  CHECK(hull_contains(seg, pt({Rational(1, 2), Rational(1, 2)})));
  CHECK(!hull_contains(seg, pt({Rational(1), Rational(1)})));
  CHECK(hull_contains(seg, pt({Rational(0), Rational(1)})));
}

TEST_CASE("projection canonicalizes") {
  VPolytope v;
  v.dim = 3;
  v.points = {pt({Rational(0), Rational(0), Rational(0)}), pt({Rational(1), Rational(0), Rational(1)}),
              pt({Rational(0), Rational(1), Rational(2)}), pt({Rational(1), Rational(1), Rational(3)})};
  VPolytope p01 = project_polytope(v, {0, 1});
  CHECK(p01.points.size() == 4);
  VPolytope p2 = project_polytope(v, {2});
  CHECK(same_points(p2.points, {pt({Rational(0)}), pt({Rational(3)})}));
}

TEST_CASE("facets of a segment include its affine hull") {
  HPolytope h = convex_hull_facets({pt({Rational(0), Rational(1)}), pt({Rational(1), Rational(0)})}, {}, 2);
  int eqs = 0;
  for (const auto& r : h.rows) eqs += r.sense == Sense::eq;
  CHECK(eqs == 1);
  CHECK(h.contains(pt({Rational(1, 2), Rational(1, 2)})));
  CHECK(!h.contains(pt({Rational(2), Rational(-1)})));   // beyond the endpoint
  CHECK(!h.contains(pt({Rational(1), Rational(1)})));    // off the line
  // the two endpoint facets must reduce the line to the segment
  VPolytope back = enumerate_vertices(h);
  CHECK(same_points(back.points, {pt({Rational(0), Rational(1)}), pt({Rational(1), Rational(0)})}));
}

TEST_CASE("facets with rays describe unbounded hulls") {
  // conv{(2,0),(0,2),(1,1)} + cone(e1,e2): facets x1+x2 >= 2, x >= 0
  std::vector<QVec> pts = {pt({Rational(2), Rational(0)}), pt({Rational(0), Rational(2)}),
                           pt({Rational(1), Rational(1)})};
  std::vector<QVec> rays = {pt({Rational(1), Rational(0)}), pt({Rational(0), Rational(1)})};
  HPolytope h = convex_hull_facets(pts, rays, 2);
  CHECK(h.contains(pt({Rational(5), Rational(7)})));
  CHECK(h.contains(pt({Rational(2), Rational(0)})));
  CHECK(!h.contains(pt({Rational(1), Rational(1, 2)})));
  CHECK(!h.contains(pt({Rational(-1), Rational(5)})));
}

TEST_CASE("integer hull of the scaled simplex") {
  MilpInstance inst;
  inst.name = "simplex";
  inst.n = 2;
  inst.vars = {{VarKind::integer, Rational(0), Rational(10)},
               {VarKind::integer, Rational(0), Rational(10)}};
  inst.rows.push_back(row({2, 2}, Sense::le, Rational(3)));
  inst.objective = {Rational(1), Rational(1)};
  VPolytope hull = integer_hull(inst);
  CHECK(same_points(hull.points, {pt({Rational(0), Rational(0)}), pt({Rational(1), Rational(0)}),
                                  pt({Rational(0), Rational(1)})}));
}

TEST_CASE("mixed integer hull of the shifted slab") {
  MilpInstance inst;
  inst.name = "mir-set";
  inst.n = 2;
  inst.vars = {{VarKind::integer, Rational(0), Rational(3)},
               {VarKind::continuous, Rational(0), Rational(3)}};
  inst.rows.push_back(row({1, 1}, Sense::ge, Rational(5, 2)));
  inst.objective = {Rational(0), Rational(0)};
  VPolytope hull = integer_hull(inst);
  CHECK(same_points(hull.points,
                    {pt({Rational(3), Rational(0)}), pt({Rational(3), Rational(3)}),
                     pt({Rational(2), Rational(1, 2)}), pt({Rational(0), Rational(5, 2)}),
                     pt({Rational(0), Rational(3)})}));
}

TEST_CASE("integer enumeration respects the cell cap") {
  MilpInstance inst;
  inst.name = "big";
  inst.n = 2;
  inst.vars = {{VarKind::integer, Rational(0), Rational(2000)},
               {VarKind::integer, Rational(0), Rational(2000)}};
  inst.rows.push_back(row({1, 1}, Sense::le, Rational(1)));
  inst.objective = {Rational(0), Rational(0)};
  CHECK_THROWS_AS(integer_points(inst), Error);
}

TEST_CASE("lp and vertex enumeration agree on random polytopes") {
  Rng rng(20240817);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));
    HPolytope p;
    p.dim = n;
    int m = 2 + static_cast<int>(rng.below(4));
    for (int i = 0; i < m; ++i) {
      LinearRow r;
      for (int j = 0; j < n; ++j) r.coeffs.push_back(Rational(rng.range(-3, 4)));
      r.sense = Sense::le;
      r.rhs = Rational(rng.range(1, 6));
      p.rows.push_back(r);
    }
    // box to keep it bounded
    for (int j = 0; j < n; ++j) {
      QVec e(n);
      e[j] = Rational(1);
      LinearRow lo{e, Sense::ge, Rational(0)}, hi{e, Sense::le, Rational(rng.range(1, 4))};
      p.rows.push_back(lo);
      p.rows.push_back(hi);
    }
    VPolytope v = enumerate_vertices(p);
    for (int probe = 0; probe < 3; ++probe) {
      QVec c;
      for (int j = 0; j < n; ++j) c.push_back(Rational(rng.range(-5, 5)));
      LpResult lp = solve_lp(p, true, c, Opt::max);
      if (v.points.empty()) {
        CHECK(lp.status == LpStatus::infeasible);
        continue;
      }
      REQUIRE(lp.status == LpStatus::optimal);
      Rational best = dot(c, v.points[0]);
      for (const auto& q : v.points) best = max(best, dot(c, q));
      CHECK(best == lp.value);
      // every enumerated vertex is feasible
      for (const auto& q : v.points) CHECK(p.contains(q));
    }
  }
}
