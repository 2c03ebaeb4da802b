#include "cutlab/aggregation.hpp"
#include "cutlab/error.hpp"
#include "cutlab/generators.hpp"
#include "cutlab/instance.hpp"
#include "cutlab/polytope.hpp"
#include "cutlab/rng.hpp"
#include "cutlab/simplex.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cutlab;

namespace {

// Integer optimum as the best hull vertex.
Rational vertex_max(const VPolytope& hull, const QVec& c) {
  REQUIRE(!hull.points.empty());
  Rational best = dot(hull.points[0], c);
  for (const auto& p : hull.points) best = max(best, dot(p, c));
  return best;
}

Variable int_var(long lb, long ub) {
  Variable v;
  v.kind = VarKind::integer;
  v.lb = Rational(lb);
  v.ub = Rational(ub);
  return v;
}

// True if some cut equals (coeffs, sense, rhs) up to positive scaling.
bool has_cut(const std::vector<Cut>& cuts, const QVec& coeffs, Sense sense, const Rational& rhs) {
  for (const auto& c : cuts) {
    if (c.sense != sense || c.coeffs.size() != coeffs.size()) continue;
    // find the scale from the first nonzero pair, then verify everywhere
    Rational s;
    bool ok = true;
    for (std::size_t i = 0; i < coeffs.size() && ok; ++i) {
      if (coeffs[i].is_zero() != c.coeffs[i].is_zero()) ok = false;
      else if (!coeffs[i].is_zero() && s.is_zero()) s = c.coeffs[i] / coeffs[i];
    }
    if (!ok || s.sign() <= 0) continue;
    for (std::size_t i = 0; i < coeffs.size() && ok; ++i)
      if (c.coeffs[i] != s * coeffs[i]) ok = false;
    if (ok && c.rhs == s * rhs) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("knapsack hull of a le row yields its facet cuts") {
  std::vector<Variable> vars = {int_var(0, 9), int_var(0, 9)};
  // {x >= 0 integer : 3x1 + 3x2 <= 4}: hull is x1 + x2 <= 1 with the axes
  auto cuts = knapsack_hull_cuts({{Rational(3), Rational(3)}, Sense::le, Rational(4)}, vars);
  CHECK(has_cut(cuts, {Rational(1), Rational(1)}, Sense::le, Rational(1)));
}

TEST_CASE("knapsack hull of a ge row uses ceil points plus recession") {
  std::vector<Variable> vars = {int_var(0, 9), int_var(0, 9)};
  // {x >= 0 integer : 2x1 + 3x2 >= 4}: facet x1 + x2 >= 2 among the results
  auto cuts = knapsack_hull_cuts({{Rational(2), Rational(3)}, Sense::ge, Rational(4)}, vars);
  CHECK(has_cut(cuts, {Rational(1), Rational(1)}, Sense::ge, Rational(2)));
  // nonpositive rhs cuts nothing
  CHECK(knapsack_hull_cuts({{Rational(2), Rational(3)}, Sense::ge, Rational(0)}, vars).empty());
}

TEST_CASE("knapsack hull survives a wide box via vertex reduction") {
  // 6(x1+..+x5) <= 25 enumerates 3125 box cells; the facet is sum x <= 4
  std::vector<Variable> vars(5, int_var(0, 9));
  QVec a(5, Rational(6));
  auto cuts = knapsack_hull_cuts({a, Sense::le, Rational(25)}, vars);
  QVec ones(5, Rational(1));
  CHECK(has_cut(cuts, ones, Sense::le, Rational(4)));
}

TEST_CASE("empty single-row set yields the marker cut") {
  std::vector<Variable> vars = {int_var(0, 5)};
  auto cuts = knapsack_hull_cuts({{Rational(2)}, Sense::le, Rational(-1)}, vars);
  REQUIRE(cuts.size() == 1);
  CHECK(cuts[0].coeffs == QVec{Rational(0)});
  CHECK(cuts[0].sense == Sense::le);
  CHECK(cuts[0].rhs == Rational(-1));
}

TEST_CASE("one-row closure is exact and sandwiched by LP and hull") {
  MilpInstance inst = gen_preprocessed_packing(4, 3, 31);
  ClosureApprox ca = one_row_closure(inst);
  CHECK(ca.exact);
  CHECK(ca.multipliers.size() == inst.rows.size());
  Rational z1 = closure_value(ca, inst.objective);
  Rational zlp = solve_relaxation(inst).value;
  VPolytope hull = integer_hull(inst);
  Rational zi = vertex_max(hull, inst.objective);
  CHECK(zlp >= z1);
  CHECK(z1 >= zi);
}

TEST_CASE("outer closure value is monotone in the sampling budget") {
  MilpInstance inst = gen_preprocessed_packing(3, 3, 13);
  Caps caps;
  caps.hull_box_cells = 1024;
  AggSampler s;
  Rational v0 = closure_value(aggregation_closure_outer(inst, s, 0, 5, caps), inst.objective);
  Rational v8 = closure_value(aggregation_closure_outer(inst, s, 8, 5, caps), inst.objective);
  // budget 8 re-samples the same stream, so its multiplier set extends budget 0's
  CHECK(v8 <= v0);
  // outer approximation never undercuts the integer hull
  CHECK(v8 >= vertex_max(integer_hull(inst), inst.objective));
}

TEST_CASE("alpha ratio is one on identical sets and detects strict gaps") {
  MilpInstance inst = gen_preprocessed_packing(3, 2, 17);
  HPolytope lp = lp_relaxation(inst);
  AlphaResult same = alpha_ratio(lp, lp, 4, 3);
  CHECK(same.ratio == Rational(1));
  CHECK(!same.unbounded);

  // halving the box doubles the ratio in every positive direction
  HPolytope box{2, {{{Rational(1), Rational(0)}, Sense::le, Rational(1)},
                    {{Rational(0), Rational(1)}, Sense::le, Rational(1)}}};
  HPolytope half{2, {{{Rational(1), Rational(0)}, Sense::le, Rational(1, 2)},
                     {{Rational(0), Rational(1)}, Sense::le, Rational(1, 2)}}};
  AlphaResult r = alpha_ratio(box, half, 4, 3);
  CHECK(r.ratio == Rational(2));
  // containment precondition: V must sit inside U
  CHECK_THROWS_AS(alpha_ratio(half, box, 4, 3), Error);
}

TEST_CASE("packing factor-two checks pass on pre-processed instances") {
  for (std::uint64_t seed : {101u, 202u, 303u}) {
    MilpInstance inst = gen_preprocessed_packing(3, 3, seed);
    Caps caps;
    caps.hull_box_cells = 1024;
    ThmAggReport rep = verify_thm_agg(inst, {inst.objective}, 4, seed, caps);
    CHECK(rep.all_ok);
    for (const auto& e : rep.entries) {
      CHECK(e.surrogate_ok);
      CHECK(e.implied_ok);
      CHECK(e.sandwich_ok);
    }
  }
}

TEST_CASE("sign-pattern experiment certifies the factor-two relation") {
  MilpInstance inst = gen_sign_pattern(3, 3, 7);
  SignPatternReport rep = sign_pattern_experiment(inst, {inst.objective}, 4, 7);
  CHECK(rep.all_ok);
  for (const auto& e : rep.entries) CHECK(e.z_1row <= Rational(2) * e.z_agg_outer);
}

TEST_CASE("aggregated cg family always contains the one-row family") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    MilpInstance inst = gen_market_split(2, 5, seed);
    CgCompareReport r = cg_1row_vs_aggregated(inst, 40, seed);
    if (r.already_integral) continue;
    CHECK(r.gap_agg >= r.gap_1row);
    CHECK(r.gap_1row >= Rational(0));
    CHECK(r.gap_agg <= Rational(1));
    CHECK(r.cuts_agg >= r.cuts_1row);
  }
}

TEST_CASE("cancellation family hits its frozen closure values") {
  for (long M : {2L, 4L}) {
    MilpInstance fam = family_1row_vs_agg(M);
    Rational zlp = solve_relaxation(fam).value;
    CHECK(zlp == Rational(M + 2, 2 * M));

    Rational z1 = closure_value(one_row_closure(fam), fam.objective);
    CHECK(z1 == zlp);  // single rows cannot cancel the continuous variable

    AggSampler s;
    s.extra = {{Rational(1), Rational(1)}};  // the cancelling multiplier
    Rational z2 = closure_value(aggregation_closure_outer(fam, s, 0, 1), fam.objective);
    CHECK(z2 == Rational(2 * M + 1, 2 * M * M));
    CHECK(z1 / z2 == Rational(M * (M + 2), 2 * M + 1));
  }
}
