#include "cutlab/error.hpp"
#include "cutlab/generators.hpp"
#include "cutlab/instance.hpp"
#include "cutlab/instance_io.hpp"
#include "cutlab/polytope.hpp"

#include <doctest.h>

using namespace cutlab;

namespace {

MilpInstance tiny_packing() {
  MilpInstance inst;
  inst.name = "tiny";
  inst.n = 2;
  Variable v;
  v.kind = VarKind::integer;
  v.lb = Rational(0);
  v.ub = Rational(3);
  inst.vars = {v, v};
  inst.rows.push_back({{Rational(2), Rational(3)}, Sense::le, Rational(7)});
  inst.objective = {Rational(1), Rational(1)};
  return inst;
}

}  // namespace

TEST_CASE("instance json round trip preserves every field") {
  MilpInstance inst = tiny_packing();
  inst.vars[1].kind = VarKind::continuous;
  inst.vars[1].ub.reset();  // unbounded above survives as "inf"
  inst.rows.push_back({{Rational(1, 2), Rational(-1)}, Sense::ge, Rational(-5, 3)});
  inst.rows.push_back({{Rational(1), Rational(1)}, Sense::eq, Rational(2)});
  inst.tags = {"blocks:0;1", "custom"};

  MilpInstance back = instance_from_json(instance_to_json(inst));
  CHECK(back.name == inst.name);
  CHECK(back.n == inst.n);
  REQUIRE(back.vars.size() == inst.vars.size());
  CHECK(back.vars[0].kind == VarKind::integer);
  CHECK(back.vars[1].kind == VarKind::continuous);
  CHECK(back.vars[0].ub.value() == Rational(3));
  CHECK(!back.vars[1].ub.has_value());
  REQUIRE(back.rows.size() == inst.rows.size());
  CHECK(back.rows[1].coeffs == inst.rows[1].coeffs);
  CHECK(back.rows[1].sense == Sense::ge);
  CHECK(back.rows[1].rhs == Rational(-5, 3));
  CHECK(back.rows[2].sense == Sense::eq);
  CHECK(back.objective == inst.objective);
  CHECK(back.tags == inst.tags);

  // serialization is deterministic byte for byte
  CHECK(instance_to_json(inst) == instance_to_json(back));
}

TEST_CASE("instance parse rejects malformed documents") {
  CHECK_THROWS_AS(instance_from_json("not json"), Error);
  CHECK_THROWS_AS(instance_from_json("{}"), Error);
  // sense strings are exactly "<=", ">=", "="
  CHECK_THROWS_AS(
      instance_from_json(R"({"name":"x","n":1,"vars":[{"kind":"int","lb":"0","ub":"1"}],)"
                         R"("rows":[{"coeffs":["1"],"sense":"<","rhs":"1"}],)"
                         R"("objective":["1"],"tags":[]})"),
      Error);
  // coefficient arity must match n
  CHECK_THROWS_AS(
      instance_from_json(R"({"name":"x","n":2,"vars":[{"kind":"int","lb":"0","ub":"1"},)"
                         R"({"kind":"int","lb":"0","ub":"1"}],)"
                         R"("rows":[{"coeffs":["1"],"sense":"<=","rhs":"1"}],)"
                         R"("objective":["1","1"],"tags":[]})"),
      Error);
}

TEST_CASE("validate rejects inconsistent bounds and arity") {
  MilpInstance inst = tiny_packing();
  inst.rows[0].coeffs.pop_back();
  CHECK_THROWS_AS(inst.validate(), Error);

  inst = tiny_packing();
  inst.vars[0].ub = Rational(-1);  // ub below lb
  CHECK_THROWS_AS(inst.validate(), Error);
}

TEST_CASE("classify tags reflect row structure") {
  MilpInstance inst = tiny_packing();
  auto tags = classify(inst);
  CHECK(std::count(tags.begin(), tags.end(), "pure-integer") == 1);
  CHECK(std::count(tags.begin(), tags.end(), "packing") == 1);
  CHECK(std::count(tags.begin(), tags.end(), "covering") == 0);
  // one nonneg row each way: neither packing nor covering, but sign-pattern
  inst.rows.push_back({{Rational(1), Rational(0)}, Sense::ge, Rational(1)});
  tags = classify(inst);
  CHECK(std::count(tags.begin(), tags.end(), "packing") == 0);
  CHECK(std::count(tags.begin(), tags.end(), "sign-pattern") == 1);
  // a column with both signs breaks the sign pattern
  inst.rows.push_back({{Rational(-1), Rational(1)}, Sense::le, Rational(1)});
  tags = classify(inst);
  CHECK(std::count(tags.begin(), tags.end(), "sign-pattern") == 0);
}

TEST_CASE("preprocess fixes forced-zero packing columns") {
  MilpInstance inst = tiny_packing();
  inst.rows.push_back({{Rational(9), Rational(1)}, Sense::le, Rational(4)});  // 9 > 4 forces x0 = 0
  PreprocessReport rep;
  MilpInstance out = preprocess_packing(inst, &rep);
  REQUIRE(rep.fixed_zero == std::vector<int>{0});
  REQUIRE(rep.kept == std::vector<int>{1});
  CHECK(out.n == 1);
  for (const auto& row : out.rows)
    for (const auto& a : row.coeffs) CHECK(a <= row.rhs);
}

TEST_CASE("partition validates covering disjoint blocks") {
  Partition part;
  part.blocks = {{0, 2}, {1}};
  part.validate(3);
  CHECK(part.block_of(2) == 0);
  CHECK(part.block_of(1) == 1);

  Partition overlap;
  overlap.blocks = {{0, 1}, {1, 2}};
  CHECK_THROWS_AS(overlap.validate(3), Error);
  Partition missing;
  missing.blocks = {{0}, {2}};
  CHECK_THROWS_AS(missing.validate(3), Error);
}

TEST_CASE("partition tag survives the instance round trip") {
  Partition part;
  MilpInstance inst = gen_partitioned_packing(3, 2, 11, &part);
  REQUIRE(has_partition_tag(inst));
  Partition back = partition_from_tag(instance_from_json(instance_to_json(inst)));
  CHECK(back.blocks == part.blocks);
}

TEST_CASE("generators are deterministic in (kind, params, seed)") {
  for (const char* kind : {"2ssp", "market-split", "random-packing", "preprocessed-packing",
                           "pure-ip", "covering", "random-milp", "sign-pattern"}) {
    MilpInstance a = generate(kind, {}, 7);
    MilpInstance b = generate(kind, {}, 7);
    CHECK(instance_to_json(a) == instance_to_json(b));
    MilpInstance c = generate(kind, {}, 8);
    CHECK(instance_to_json(a) != instance_to_json(c));
  }
  CHECK_THROWS_AS(generate("no-such-kind", {}, 1), Error);
  CHECK_THROWS_AS(generate("pure-ip", {{"bogus", 1}}, 1), Error);
}

TEST_CASE("generated instances satisfy their advertised shapes") {
  MilpInstance pp = generate("preprocessed-packing", {{"n", 4}, {"m", 3}}, 5);
  for (const auto& row : pp.rows) {
    CHECK(row.sense == Sense::le);
    for (const auto& a : row.coeffs) {
      CHECK(a.sign() >= 0);
      CHECK(a <= row.rhs);  // the pre-processed property
    }
  }
  MilpInstance ms = generate("market-split", {{"m", 2}, {"n", 5}}, 3);
  CHECK(ms.pure_integer());
  for (const auto& row : ms.rows) CHECK(row.sense == Sense::eq);
  // the generator plants a feasible 0/1 point
  CHECK(!integer_points(ms).empty());

  MilpInstance ip = generate("pure-ip", {{"n", 3}, {"m", 4}}, 9);
  CHECK(ip.pure_integer());
  CHECK(!integer_points(ip).empty());
}
