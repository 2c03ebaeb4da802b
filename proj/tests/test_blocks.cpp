#include "cutlab/blocks.hpp"
#include "cutlab/error.hpp"
#include "cutlab/generators.hpp"
#include "cutlab/instance.hpp"

#include <doctest.h>

using namespace cutlab;

namespace {

InteractionGraph graph_of(int q, std::vector<std::pair<int, int>> edges) {
  InteractionGraph g;
  g.q = q;
  g.adj.assign(q, std::vector<bool>(q, false));
  for (auto [a, b] : edges) {
    g.adj[a][b] = g.adj[b][a] = true;
    g.edges.emplace_back(a, b);
  }
  return g;
}

}  // namespace

TEST_CASE("two-stage instances interact in a star") {
  std::vector<int> sizes = {2, 1, 2, 1};  // hub of 2, three scenario blocks
  MilpInstance inst = gen_two_stage_packing(3, sizes, 5);
  Partition part = two_stage_partition(3, sizes);
  part.validate(inst.n);
  InteractionGraph g = interaction_graph(inst, part);
  REQUIRE(g.q == 4);
  // hub touches every scenario; scenarios never touch each other
  std::vector<std::pair<int, int>> expect = {{0, 1}, {0, 2}, {0, 3}};
  CHECK(g.edges == expect);
}

TEST_CASE("fractional chromatic number matches hand-computed graphs") {
  CHECK(fractional_chromatic(graph_of(1, {})) == Rational(1));
  CHECK(fractional_chromatic(graph_of(2, {{0, 1}})) == Rational(2));
  CHECK(fractional_chromatic(graph_of(3, {{0, 1}, {0, 2}, {1, 2}})) == Rational(3));
  // independent nodes share one color
  CHECK(fractional_chromatic(graph_of(3, {})) == Rational(1));
  // star: two colors regardless of leaf count
  CHECK(fractional_chromatic(graph_of(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})) == Rational(2));
  // 5-cycle: the classic strictly-fractional value 5/2
  CHECK(fractional_chromatic(graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})) ==
        Rational(5, 2));

  Caps caps;
  caps.chromatic_nodes = 4;
  CHECK_THROWS_AS(fractional_chromatic(graph_of(5, {}), caps), Error);
}

TEST_CASE("singleton supports enumerate one block each") {
  SupportList s = singleton_supports(3);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == std::vector<int>{0});
  CHECK(s[2] == std::vector<int>{2});
}

TEST_CASE("block-sparse closure value sits between hull and relaxation") {
  Partition part;
  MilpInstance inst = gen_partitioned_packing(2, 2, 9, &part);
  BlockSparseResult r =
      block_sparse_closure_value(inst, part, singleton_supports(2), inst.objective);
  CHECK(r.z_sparse >= r.z_I);
}

TEST_CASE("eta bound verification holds at the fractional chromatic number") {
  Partition part;
  MilpInstance inst = gen_partitioned_packing(3, 1, 4, &part);
  InteractionGraph g = interaction_graph(inst, part);
  Rational chi = fractional_chromatic(g);
  EtaReport rep = verify_eta_bound(inst, part, singleton_supports(g.q), chi,
                                   {inst.objective});
  CHECK(rep.all_ok);
  REQUIRE(rep.entries.size() == 1);
  CHECK(rep.entries[0].z_sparse <= chi * rep.entries[0].z_I);

  // an impossible eta (zero) must be reported as a violation, not hidden
  if (rep.entries[0].z_sparse.sign() > 0) {
    EtaReport bad = verify_eta_bound(inst, part, singleton_supports(g.q), Rational(0),
                                     {inst.objective});
    CHECK(!bad.all_ok);
  }
}

TEST_CASE("twin points certify the two-stage factor-two chain") {
  std::vector<int> sizes = {1, 2, 2};
  MilpInstance inst = gen_two_stage_packing(2, sizes, 21);
  TwinPointReport rep = twin_point_certificate(inst, two_stage_partition(2, sizes));
  CHECK(rep.feasible_first);
  CHECK(rep.feasible_rest);
  CHECK(rep.chain_ok);
  CHECK(rep.z_sparse <= rep.sum_value);
  CHECK(rep.sum_value <= Rational(2) * rep.z_I);
  // the two assembled points split the variable range disjointly
  for (std::size_t j = 0; j < rep.x_first.size(); ++j)
    CHECK((rep.x_first[j].is_zero() || rep.x_rest[j].is_zero()));
}
