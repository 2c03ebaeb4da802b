#include "cutlab/error.hpp"
#include "cutlab/generators.hpp"
#include "cutlab/interval.hpp"
#include "cutlab/rng.hpp"
#include "cutlab/sparsifier.hpp"
#include "cutlab/sparsity.hpp"

#include <doctest.h>

using namespace cutlab;

namespace {

VPolytope segment() {
  // conv{(0,1),(1,0)}: the standard fixture
  return {2, {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}};
}

}  // namespace

TEST_CASE("sparse closure of the segment at k=1 is the unit square") {
  HPolytope h = sparse_closure(segment(), 1);
  QVec corner = {Rational(1), Rational(1)};
  QVec outside = {Rational(1), Rational(11, 10)};
  CHECK(h.contains(corner));
  CHECK(!h.contains(outside));

  // at k = n the closure collapses to the polytope itself
  HPolytope full = sparse_closure(segment(), 2);
  CHECK(!full.contains(corner));
  CHECK(full.contains({Rational(1, 2), Rational(1, 2)}));
}

TEST_CASE("sparse closure validates its preconditions") {
  CHECK_THROWS_AS(sparse_closure(segment(), 0), Error);
  CHECK_THROWS_AS(sparse_closure(segment(), 3), Error);
  VPolytope outside = {2, {{Rational(2), Rational(0)}}};  // not inside [0,1]^2
  CHECK_THROWS_AS(sparse_closure(outside, 1), Error);
}

TEST_CASE("segment fixture distance is exactly one half") {
  DistPkResult d = dist_pk(segment(), 1);
  CHECK(d.sq_dist == Rational(1, 2));
  CHECK(d.witness == QVec{Rational(1), Rational(1)});
  // k = n: the closure is the polytope, distance 0
  CHECK(dist_pk(segment(), 2).sq_dist == Rational(0));
}

TEST_CASE("fixture bound squares to eight and certifies the distance") {
  // min(8 sqrt(2/1) sqrt(2 ln 16), 2 sqrt(2) (2-1)): the second term wins, 2 sqrt(2)
  Theorem1Bound b = theorem1_bound(2, 1, 2);
  CHECK(b.bound.lo * b.bound.lo <= Rational(8));
  CHECK(b.bound.hi * b.bound.hi >= Rational(8));
  CHECK(b.bound.lo > Rational(0));
  // the enclosure is tight enough to matter
  CHECK(b.bound.hi - b.bound.lo < Rational(1, 1000));
  CHECK(certified_sq_le(Rational(1, 2), b.bound));
  CHECK(!certified_sq_le(Rational(9), b.bound));
}

TEST_CASE("certified comparison uses the lower end of the enclosure") {
  Interval iv{Rational(2), Rational(3)};
  CHECK(certified_sq_le(Rational(4), iv));
  CHECK(!certified_sq_le(Rational(17, 4), iv));  // between lo^2 and hi^2: not certified
}

TEST_CASE("distance bound shrinks as k grows") {
  Theorem1Bound loose = theorem1_bound(6, 1, 4);
  Theorem1Bound tight = theorem1_bound(6, 6, 4);
  CHECK(tight.bound.hi < loose.bound.lo);
  // k = n makes the polynomial term vanish
  CHECK(tight.term2.lo == Rational(0));
  CHECK_THROWS_AS(theorem1_bound(6, 0, 4), Error);
  CHECK_THROWS_AS(theorem1_bound(6, 7, 4), Error);
  CHECK_THROWS_AS(theorem1_bound(1, 1, 4), Error);
}

TEST_CASE("sqrt and ln enclosures bracket known values") {
  Interval r2 = sqrt_enclosure(Rational(2));
  CHECK(r2.lo * r2.lo <= Rational(2));
  CHECK(r2.hi * r2.hi >= Rational(2));
  CHECK(r2.hi - r2.lo < Rational(1, 1 << 20));

  Interval l1 = ln_enclosure(Rational(1));
  CHECK(l1.lo == Rational(0));
  Interval le = ln_enclosure(Rational(27183, 10000));  // just above e: ln > 1
  CHECK(le.lo > Rational(1));
  CHECK(le.hi < Rational(101, 100));
}

TEST_CASE("sparsifier inputs satisfy the margin and round trip the pipeline") {
  int successes = 0;
  for (int index = 0; index < 6; ++index) {
    SparsifierInput inp = gen_sparsifier_spec(index, 77);
    CHECK(inp.sq_lambda > Rational(0));
    CHECK(static_cast<int>(inp.u.size()) == static_cast<int>(inp.P.dim));
    SparsifyResult r = sparsify_cut(inp, task_seed(77, index), 1000);
    if (!r.success) continue;  // rare by design; the run-rate criterion lives in acceptance
    ++successes;
    CHECK(support_size(r.cut.coeffs) <= inp.k);
    // every returned cut must be exactly valid and separating, no exceptions
    for (const auto& p : inp.P.points) CHECK(r.cut.satisfied_by(p));
    CHECK(cut_violation(r.cut, inp.u).sign() > 0);
  }
  CHECK(successes >= 5);
}

TEST_CASE("sparsifier rejects inputs that violate its preconditions") {
  VPolytope seg = segment();
  // u inside P
  CHECK_THROWS_AS(make_sparsifier_input(seg, {Rational(1, 2), Rational(1, 2)}, 1), Error);
  // margin too small: u barely outside
  CHECK_THROWS_AS(make_sparsifier_input(seg, {Rational(1), Rational(1)}, 1), Error);
  // far enough along the diagonal the margin precondition holds
  SparsifierInput inp = make_sparsifier_input(seg, {Rational(40), Rational(40)}, 1);
  CHECK(inp.v == QVec{Rational(1, 2), Rational(1, 2)});
  CHECK(inp.sq_lambda == Rational(2) * Rational(79, 2) * Rational(79, 2));
}

TEST_CASE("k-sparse separating direction short-circuits deterministically") {
  // u in line with the endpoint (1,0): dir = (49,0) is already 1-sparse
  VPolytope seg = segment();
  SparsifierInput inp = make_sparsifier_input(seg, {Rational(50), Rational(0)}, 1);
  SparsifyResult r = sparsify_cut(inp, 1, 10);
  REQUIRE(r.success);
  CHECK(r.deterministic);
  CHECK(r.draws == 0);
  CHECK(support_size(r.cut.coeffs) == 1);
}
