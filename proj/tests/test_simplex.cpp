#include "cutlab/simplex.hpp"

#include <doctest.h>

using namespace cutlab;

namespace {

LinearRow row(std::vector<long> coeffs, Sense s, Rational rhs) {
  LinearRow r;
  for (long c : coeffs) r.coeffs.push_back(Rational(c));
  r.sense = s;
  r.rhs = rhs;
  return r;
}

}  // namespace

TEST_CASE("lp optimum on the scaled simplex") {
  HPolytope p;
  p.dim = 2;
  p.rows.push_back(row({2, 2}, Sense::le, Rational(3)));
  QVec obj{Rational(1), Rational(1)};
  LpResult r = solve_lp(p, true, obj, Opt::max);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == Rational(3, 2));
  CHECK(dot(obj, r.x) == Rational(3, 2));
  LpResult mn = solve_lp(p, true, obj, Opt::min);
  CHECK(mn.value == Rational(0));
}

TEST_CASE("lp detects unbounded and infeasible") {
  HPolytope p;
  p.dim = 1;
  p.rows.push_back(row({1}, Sense::ge, Rational(1)));
  CHECK(solve_lp(p, true, {Rational(1)}, Opt::max).status == LpStatus::unbounded);
  CHECK(solve_lp(p, true, {Rational(1)}, Opt::min).status == LpStatus::optimal);

  HPolytope q;
  q.dim = 1;
  q.rows.push_back(row({1}, Sense::le, Rational(-1)));
  CHECK(solve_lp(q, true, {Rational(1)}, Opt::max).status == LpStatus::infeasible);

  HPolytope z;  // zero row inconsistencies
  z.dim = 1;
  z.rows.push_back(row({0}, Sense::ge, Rational(2)));
  CHECK(solve_lp(z, true, {Rational(1)}, Opt::max).status == LpStatus::infeasible);
}

TEST_CASE("lp with equality rows and free variables") {
  HPolytope p;
  p.dim = 2;
  p.rows.push_back(row({1, 1}, Sense::eq, Rational(2)));
  p.rows.push_back(row({1, -1}, Sense::le, Rational(0)));
  LpResult r = solve_lp(p, true, {Rational(1), Rational(0)}, Opt::max);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == Rational(1));

  // free variable: max -x s.t. x >= -5
  HPolytope f;
  f.dim = 1;
  f.rows.push_back(row({1}, Sense::ge, Rational(-5)));
  LpResult fr = solve_lp(f, false, {Rational(-1)}, Opt::max);
  REQUIRE(fr.status == LpStatus::optimal);
  CHECK(fr.x[0] == Rational(-5));
  CHECK(fr.value == Rational(5));
}

TEST_CASE("fractional data stays exact") {
  HPolytope p;
  p.dim = 2;
  LinearRow r1;
  r1.coeffs = {Rational(1, 3), Rational(1, 7)};
  r1.sense = Sense::le;
  r1.rhs = Rational(1);
  p.rows.push_back(r1);
  LpResult r = solve_lp(p, true, {Rational(1), Rational(0)}, Opt::max);
  CHECK(r.value == Rational(3));
  r = solve_lp(p, true, {Rational(0), Rational(1)}, Opt::max);
  CHECK(r.value == Rational(7));
}

TEST_CASE("tableau snapshot identifies the basis") {
  HPolytope p;
  p.dim = 2;
  p.rows.push_back(row({2, 2}, Sense::le, Rational(3)));
  LpResult r = solve_lp(p, true, {Rational(1), Rational(1)}, Opt::max);
  REQUIRE(r.status == LpStatus::optimal);
  REQUIRE(!r.tableau.rows.empty());
  // every tableau row: basic column has coefficient 1 there, rhs >= 0
  for (const auto& tr : r.tableau.rows) {
    CHECK(tr.coeffs[tr.basic_col] == Rational(1));
    CHECK(tr.rhs >= Rational(0));
  }
  // column identities cover structural then slack
  REQUIRE(r.tableau.cols.size() == 3);
  CHECK(r.tableau.cols[0].kind == TableauCol::structural);
  CHECK(r.tableau.cols[2].kind == TableauCol::slack);
  CHECK(r.tableau.cols[2].index == 0);
}

TEST_CASE("degenerate ties terminate (Bland)") {
  // classic degenerate diamond; just has to terminate with the right value
  HPolytope p;
  p.dim = 2;
  p.rows.push_back(row({1, 1}, Sense::le, Rational(1)));
  p.rows.push_back(row({1, -1}, Sense::le, Rational(0)));
  p.rows.push_back(row({-1, 1}, Sense::le, Rational(0)));
  p.rows.push_back(row({2, 2}, Sense::le, Rational(2)));
  LpResult r = solve_lp(p, true, {Rational(1), Rational(1)}, Opt::max);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == Rational(1));
}
