#include "cutlab/cuts.hpp"
#include "cutlab/error.hpp"
#include "cutlab/gomory.hpp"
#include "cutlab/instance.hpp"
#include "cutlab/polytope.hpp"
#include "cutlab/simplex.hpp"

#include <doctest.h>

using namespace cutlab;

namespace {

Variable int_var(long lb, long ub) {
  Variable v;
  v.kind = VarKind::integer;
  v.lb = Rational(lb);
  v.ub = Rational(ub);
  return v;
}

Variable cont_var(long lb, long ub) {
  Variable v = int_var(lb, ub);
  v.kind = VarKind::continuous;
  return v;
}

MilpInstance two_var_ip() {
  MilpInstance inst;
  inst.name = "twovar";
  inst.n = 2;
  inst.vars = {int_var(0, 4), int_var(0, 4)};
  inst.rows.push_back({{Rational(2), Rational(2)}, Sense::le, Rational(3)});
  inst.objective = {Rational(1), Rational(1)};
  return inst;
}

}  // namespace

TEST_CASE("cg cut floors a le row and ceils a ge row") {
  std::vector<Variable> vars = {int_var(0, 5), int_var(0, 5)};
  Cut le = cg_cut({{Rational(2), Rational(2)}, Sense::le, Rational(3)}, vars);
  CHECK(le.coeffs == QVec{Rational(2), Rational(2)});
  CHECK(le.rhs == Rational(1));

  Cut ge = cg_cut({{Rational(3, 2), Rational(5, 2)}, Sense::ge, Rational(2)}, vars);
  CHECK(ge.sense == Sense::ge);
  CHECK(ge.coeffs == QVec{Rational(2), Rational(3)});
  CHECK(ge.rhs == Rational(2));

  // support must be integer-kind; a continuous support variable is rejected
  std::vector<Variable> mixed = {int_var(0, 5), cont_var(0, 5)};
  CHECK_THROWS_AS(cg_cut({{Rational(1), Rational(1)}, Sense::le, Rational(3, 2)}, mixed), Error);
  // ...but a zero coefficient on the continuous variable is fine
  Cut ok = cg_cut({{Rational(3, 2), Rational(0)}, Sense::le, Rational(5, 2)}, mixed);
  CHECK(ok.coeffs == QVec{Rational(1), Rational(0)});
  CHECK(ok.rhs == Rational(2));
}

TEST_CASE("aggregate combines rows into the requested orientation") {
  MilpInstance inst;
  inst.n = 2;
  inst.vars = {int_var(0, 9), int_var(0, 9)};
  inst.rows.push_back({{Rational(1), Rational(2)}, Sense::le, Rational(5)});
  inst.rows.push_back({{Rational(1), Rational(-1)}, Sense::ge, Rational(-1)});
  inst.rows.push_back({{Rational(1), Rational(1)}, Sense::eq, Rational(4)});
  inst.objective = {Rational(1), Rational(1)};

  // ge rows are negated into a le aggregation
  Cut c = aggregate(inst, {Rational(1), Rational(1), Rational(0)}, Sense::le);
  CHECK(c.sense == Sense::le);
  CHECK(c.coeffs == QVec{Rational(0), Rational(3)});
  CHECK(c.rhs == Rational(6));

  // negative multiplier: only on equality rows, and only when allowed
  CHECK_THROWS_AS(aggregate(inst, {Rational(0), Rational(0), Rational(-1)}, Sense::le), Error);
  Cut e = aggregate(inst, {Rational(0), Rational(0), Rational(-1)}, Sense::le, true);
  CHECK(e.coeffs == QVec{Rational(-1), Rational(-1)});
  CHECK(e.rhs == Rational(-4));
  CHECK_THROWS_AS(aggregate(inst, {Rational(-1), Rational(0), Rational(0)}, Sense::le, true),
                  Error);
}

TEST_CASE("mir cut on the basic mixed set") {
  // x + y >= 5/2, x integer, y >= 0 continuous: f = 1/2, cut x + 2y >= 3
  std::vector<Variable> vars = {int_var(0, 10), cont_var(0, 10)};
  LinearRow row{{Rational(1), Rational(1)}, Sense::ge, Rational(5, 2)};
  MirEmbedding emb = mir_embed_ge_row(row, vars);
  Cut mir = mir_cut(emb, vars);
  CHECK(mir.sense == Sense::ge);
  CHECK(mir.coeffs == QVec{Rational(1), Rational(2)});
  CHECK(mir.rhs == Rational(3));

  // integral rhs has f = 0: no mir cut exists
  MirEmbedding bad = emb;
  bad.rhs = Rational(2);
  CHECK_THROWS_AS(mir_cut(bad, vars), Error);
}

TEST_CASE("mir complement embedding recovers the ceil-form cg cut") {
  std::vector<Variable> vars = {int_var(0, 5), int_var(0, 5)};
  LinearRow row{{Rational(2), Rational(3)}, Sense::le, Rational(7, 2)};
  Cut mir = mir_cut(mir_embed_le_complement(row, vars), vars);
  Cut cg = cg_cut(row, vars);
  // the mir cut is the negated cg cut: -2x1 - 3x2 >= -3 vs 2x1 + 3x2 <= 3
  REQUIRE(mir.sense == Sense::ge);
  REQUIRE(cg.sense == Sense::le);
  for (int i = 0; i < 2; ++i) CHECK(mir.coeffs[i] == -cg.coeffs[i]);
  CHECK(mir.rhs == -cg.rhs);
}

TEST_CASE("corner cut separates the fractional vertex by exactly one") {
  MilpInstance inst = two_var_ip();
  HPolytope relax = lp_relaxation(inst);
  LpResult lp = solve_lp(relax, true, inst.objective, Opt::max);
  REQUIRE(lp.status == LpStatus::optimal);
  REQUIRE(lp.value == Rational(3, 2));

  bool found = false;
  for (std::size_t r = 0; r < lp.tableau.rows.size(); ++r) {
    const auto& col = lp.tableau.cols[static_cast<std::size_t>(lp.tableau.rows[r].basic_col)];
    if (col.kind != TableauCol::structural) continue;
    if (lp.x[static_cast<std::size_t>(col.index)].is_integer()) continue;
    GmicResult g = gmic(inst, relax, lp.tableau, static_cast<int>(r));
    found = true;
    // cut is valid and cuts off the LP vertex
    CHECK(cut_valid(inst, g.cut));
    CHECK(cut_violation(g.cut, lp.x).sign() > 0);
    // in tableau space the vertex sits at 0 on every nonbasic, rhs is 1
    REQUIRE(g.tableau_coeffs.size() == lp.tableau.cols.size());
  }
  CHECK(found);
}

TEST_CASE("subadditive cut from the ceil-half-sum function") {
  MilpInstance inst;
  inst.n = 2;
  inst.vars = {int_var(0, 5), int_var(0, 5)};
  inst.rows.push_back({{Rational(1), Rational(2)}, Sense::ge, Rational(3)});
  inst.objective = {Rational(1), Rational(1)};

  SubadditiveFn f;
  f.m = 1;
  f.name = "ceil-half-sum";
  f.eval = [](const QVec& v) {
    Rational s;
    for (const auto& q : v) s = s + q;
    return Rational(ceil(s / Rational(2)));
  };
  Cut c = subadditive_cut(f, inst, 42);
  CHECK(c.sense == Sense::ge);
  CHECK(c.coeffs == QVec{Rational(1), Rational(1)});  // ceil(1/2), ceil(2/2)
  CHECK(c.rhs == Rational(2));                        // ceil(3/2)
  CHECK(cut_valid(inst, c));

  // a non-subadditive function is rejected with a witness
  SubadditiveFn bad;
  bad.m = 1;
  bad.name = "square";
  bad.eval = [](const QVec& v) { return v[0] * v[0]; };
  CHECK_THROWS_AS(subadditive_cut(bad, inst, 42), Error);
}

TEST_CASE("validity oracle rejects an invalid cut") {
  MilpInstance inst = two_var_ip();
  Cut good{{Rational(1), Rational(1)}, Sense::le, Rational(1), {}};
  Cut bad{{Rational(1), Rational(1)}, Sense::le, Rational(0), {}};  // cuts off (1,0)
  CHECK(cut_valid(inst, good));
  CHECK(!cut_valid(inst, bad));
}

TEST_CASE("cut json round trip preserves provenance") {
  Cut c{{Rational(1, 3), Rational(-2)}, Sense::ge, Rational(7, 5), {}};
  c.provenance.generator = "gmic";
  c.provenance.multipliers = {Rational(1, 2)};
  c.provenance.source_rows = {3, 1};
  c.provenance.basic_var = 2;
  c.provenance.note = "row 0";
  Cut back = cut_from_json(cut_to_json(c));
  CHECK(back.coeffs == c.coeffs);
  CHECK(back.sense == c.sense);
  CHECK(back.rhs == c.rhs);
  CHECK(back.provenance.generator == "gmic");
  CHECK(back.provenance.multipliers == c.provenance.multipliers);
  CHECK(back.provenance.source_rows == c.provenance.source_rows);
  CHECK(back.provenance.basic_var == 2);
  CHECK(back.provenance.note == "row 0");
}

TEST_CASE("rounding loop reaches the brute-force optimum") {
  MilpInstance inst = two_var_ip();
  GomoryResult r = gomory_loop(inst);
  REQUIRE(r.status == GomoryResult::Status::optimal);
  CHECK(r.optimum == Rational(1));
  CHECK(inst.rows[0].satisfied_by(r.solution));
  for (const auto& x : r.solution) CHECK(x.is_integer());

  // brute force agrees
  Rational best(-1);
  for (const QVec& p : integer_points(inst)) best = max(best, dot(inst.objective, p));
  CHECK(best == r.optimum);
}

TEST_CASE("rounding loop reports infeasibility and cap hits honestly") {
  MilpInstance inf;
  inf.n = 1;
  inf.vars = {int_var(0, 3)};
  inf.rows.push_back({{Rational(2)}, Sense::le, Rational(-1)});
  inf.objective = {Rational(1)};
  CHECK(gomory_loop(inf).status == GomoryResult::Status::infeasible);

  MilpInstance inst = two_var_ip();
  Caps caps;
  caps.gomory_iters = 1;  // too few rounds to finish: must report cap_hit, not an optimum
  GomoryResult r = gomory_loop(inst, Opt::max, caps);
  CHECK(r.status == GomoryResult::Status::cap_hit);
  CHECK(r.iterations == 1);
}
