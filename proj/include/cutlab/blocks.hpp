#pragma once

#include "cutlab/caps.hpp"
#include "cutlab/instance.hpp"
#include "cutlab/simplex.hpp"

#include <utility>
#include <vector>

namespace cutlab {

// One node per partition block; an edge wherever some row has nonzero
// coefficients in both blocks.
struct InteractionGraph {
  int q = 0;
  std::vector<std::vector<bool>> adj;
  std::vector<std::pair<int, int>> edges;  // i < j, lexicographic
};

InteractionGraph interaction_graph(const MilpInstance& inst, const Partition& part);

// Exact fractional chromatic number: minimum total weight over all maximal
// stable sets covering every node at least once (exact LP; the sets are
// enumerated, so q is capped by caps.chromatic_nodes).
Rational fractional_chromatic(const InteractionGraph& g, const Caps& caps = {});

// Node subsets S of the interaction graph; a cut "supported on S" may touch
// exactly the variables of the blocks of S.
using SupportList = std::vector<std::vector<int>>;

SupportList singleton_supports(int q);

struct BlockSparseResult {
  Rational z_sparse;  // max c.x over the block-sparse closure
  Rational z_I;       // max c.x over the integer hull
};

// The closure is LP(inst) intersected with, for each S, the lifted facets of
// the integer hull projected onto the variables of S's blocks (for packing
// sets those are exactly the valid cuts supported on S). Requires a bounded
// packing instance and c >= 0.
BlockSparseResult block_sparse_closure_value(const MilpInstance& inst, const Partition& part,
                                             const SupportList& supports, const QVec& c,
                                             const Caps& caps = {});

struct EtaEntry {
  QVec c;
  Rational z_sparse;
  Rational z_I;
  bool ok = false;  // z_sparse <= eta * z_I, exactly
};

struct EtaReport {
  Rational eta;
  std::vector<EtaEntry> entries;
  bool all_ok = true;
};

// Asserts z_sparse <= eta * z_I for every objective (all must be >= 0). A
// violating entry is reported, never dropped: it means a bug somewhere, not a
// tolerable miss.
EtaReport verify_eta_bound(const MilpInstance& inst, const Partition& part,
                           const SupportList& supports, const Rational& eta,
                           const std::vector<QVec>& objectives, const Caps& caps = {});

// Proof artifact for two-stage packing instances (hub block first): the two
// assembled points (x~0, 0, ..., 0) and (0, x~1, ..., x~k), where x~i
// maximizes the block-i objective over the projected integer hull. Their
// feasibility and the chain z_sparse <= sum_i v~_i <= 2 z_I are checked
// exactly (z_sparse from singleton supports).
struct TwinPointReport {
  QVec x_first;        // hub block's maximizer, zeros elsewhere
  QVec x_rest;         // zeros on the hub, per-block maximizers elsewhere
  Rational sum_value;  // sum of the per-block maxima v~_i
  Rational z_sparse;
  Rational z_I;
  bool feasible_first = false;
  bool feasible_rest = false;
  bool chain_ok = false;
};

TwinPointReport twin_point_certificate(const MilpInstance& inst, const Partition& part,
                                       const Caps& caps = {});

}  // namespace cutlab
