#pragma once

#include "cutlab/caps.hpp"
#include "cutlab/cuts.hpp"
#include "cutlab/instance.hpp"
#include "cutlab/simplex.hpp"

#include <cstdint>
#include <vector>

namespace cutlab {

// Facet cuts of the integer hull of a single row over the nonnegative integer
// (or mixed, per kinds) domain. Three regimes:
//   - le row, nonnegative coefficients, integer vars with lb 0: the hull of
//     {x in Z^n_+ : a.x <= b} via the row-implied box floor(b/a_j) (no
//     instance upper bounds, so the result is the definitional knapsack hull);
//     zero-coefficient variables enter as recession rays.
//   - ge row, nonnegative coefficients, integer vars with lb 0: points inside
//     the box ceil(b/a_j) plus all unit recession rays (any coordinate may
//     grow); rhs <= 0 means the row cuts nothing and {} is returned.
//   - anything else (mixed signs or kinds, eq sense, lb > 0): the bounded
//     single-row instance's integer hull; every variable needs a finite ub.
// An empty single-row set yields the single marker cut 0.x <= -1. Trivial
// facets already implied by the variable bounds are dropped; equality rows of
// lower-dimensional hulls expand into a le/ge pair.
std::vector<Cut> knapsack_hull_cuts(const LinearRow& row, const std::vector<Variable>& vars,
                                    const Caps& caps = {});

// An approximation of a closure: the LP relaxation plus a cut list. `exact`
// is set only when the construction provably equals the closure (the 1-row
// closure from per-row hulls); otherwise the set is outer — it contains the
// true closure, so any upper bound computed over it upper-bounds the closure.
struct ClosureApprox {
  HPolytope base;                  // LP relaxation rows (incl. bound rows)
  std::vector<Cut> cuts;
  bool exact = false;
  std::vector<QVec> multipliers;   // every aggregation that contributed
  int skipped = 0;                 // multipliers dropped on resource caps
  HPolytope as_hpolytope() const;  // base rows followed by cut rows
};

// Multiplier sampling scheme: all unit vectors, then caller-pinned extras,
// then `budget` random sparse nonnegative integer vectors (entries in
// [1, max_entry], support size in [1, max_support]).
struct AggSampler {
  long max_entry = 10;
  int max_support = 3;
  bool include_units = true;
  std::vector<QVec> extra;
};

// Outer approximation of the aggregation closure from sampled multipliers:
// intersects the knapsack hulls of lambda-aggregated rows over the LP
// relaxation. Orientation is ge for covering instances, le otherwise (rows of
// the opposite sense are negated in, keeping multipliers nonnegative). A
// multiplier whose hull exceeds the caps is skipped and counted — dropping a
// piece of an intersection keeps the approximation outer. Errors: no unit
// multipliers, no extras and budget 0 (empty intersection basis).
ClosureApprox aggregation_closure_outer(const MilpInstance& inst, const AggSampler& sampler,
                                        int budget, std::uint64_t seed, const Caps& caps = {});

// The 1-row closure: per-row knapsack hulls intersected with the LP
// relaxation, unit multipliers recorded. Exact (caps propagate as errors
// rather than skipping, since exactness is promised).
ClosureApprox one_row_closure(const MilpInstance& inst, const Caps& caps = {});

// Optimum of c over the approximation (ambient x >= 0).
Rational closure_value(const ClosureApprox& ca, const QVec& c, Opt sense = Opt::max);

struct AlphaResult {
  Rational ratio;  // max over sampled c >= 0 of the U-vs-V value ratio
  QVec worst_c;    // objective attaining it (or witnessing unboundedness)
  bool unbounded = false;  // some c had positive value on U(V) but 0 on V(U)
};

// Empirical approximation factor between nested sets U >= V over the
// nonnegative orthant: for max sense the ratio val(U,c)/val(V,c), for min
// sense val(V,c)/val(U,c), maximized over unit objectives, the all-ones
// objective, and `budget` random nonnegative ones; 0/0 counts as 1.
// Containment of V in U is asserted by vertex membership first.
AlphaResult alpha_ratio(const HPolytope& U, const HPolytope& V, int budget, std::uint64_t seed,
                        Opt sense = Opt::max, const Caps& caps = {});

struct ThmAggEntry {
  QVec c;
  Rational z_lp, z_agg_outer, z_I;
  bool surrogate_ok = false;  // z_lp <= 2 z_I
  bool implied_ok = false;    // z_lp <= 2 z_agg_outer
  bool sandwich_ok = false;   // z_lp >= z_agg_outer >= z_I
};

struct ThmAggReport {
  std::vector<ThmAggEntry> entries;
  bool all_ok = true;
  int skipped = 0;
};

// Packing two-approximation check on a pre-processed packing instance
// (0 <= A_ij <= b_i required; bounded). Per objective c >= 0 three exact
// checks: the surrogate z_lp <= 2 z_I (strictly stronger than the theorem
// statement, so a violation is possible and reported, never hidden), the
// implied bound z_lp <= 2 z_agg_outer (guaranteed: with integer ubs >= 1 the
// bound rows are themselves pre-processed packing rows, so the theorem covers
// the boxed instance, and the outer closure only widens the right side), and
// the structural sandwich z_lp >= z_agg_outer >= z_I.
ThmAggReport verify_thm_agg(const MilpInstance& inst, const std::vector<QVec>& objectives,
                            int budget, std::uint64_t seed, const Caps& caps = {});

struct SignPatternEntry {
  QVec c;
  Rational z_1row, z_agg_outer;
  bool ok = false;  // z_1row <= 2 z_agg_outer
};

struct SignPatternReport {
  std::vector<SignPatternEntry> entries;
  bool all_ok = true;
  int skipped = 0;
};

// Sign-pattern experiment: since no aggregation can cancel a variable, the
// aggregation closure is claimed 2-approximated by the 1-row closure; the
// exact implied check compares the (exact) 1-row value against twice the
// outer aggregation value, which upper-bounds twice the true closure value.
SignPatternReport sign_pattern_experiment(const MilpInstance& inst,
                                          const std::vector<QVec>& objectives, int budget,
                                          std::uint64_t seed, const Caps& caps = {});

struct CgCompareReport {
  Rational z_lp, z_I;
  Rational z_cut_1row, z_cut_agg;  // LP value after adding each cut family
  Rational gap_1row, gap_agg;      // share of the LP-to-IP gap closed
  bool already_integral = false;   // z_lp == z_I: gap undefined
  int cuts_1row = 0, cuts_agg = 0;
};

// CG cuts from original rows only vs CG cuts from rational aggregations: a
// deterministic ladder of proper mod-q multiplier pairs (q = 2..5 ascending
// over all row pairs, both signs on equality rows) followed by random draws,
// both within `budget` aggregations total. The aggregated family always
// contains the 1-row family, so gap_agg >= gap_1row holds structurally; the
// experiment measures by how much. Pure-integer bounded instances only.
CgCompareReport cg_1row_vs_aggregated(const MilpInstance& inst, int budget, std::uint64_t seed,
                                      const Caps& caps = {});

// Parametric mixed-integer family demonstrating a growing gap between the
// 1-row closure and the aggregation closure (an artifact construction; the
// cited worst-case family is not reproduced in the source text). Variables
// x in Z_+ (ub M+1), y in R_+ (ub 2M+1); rows x + y <= M + 1/2 and
// x - y <= 1/2 - M; objective (1, 1/M^2). The rows' own hulls only add
// x <= M, leaving the LP value (M+2)/(2M), while the multiplier (1,1)
// cancels y into 2x <= 1, forcing x = 0 and the value (2M+1)/(2M^2): the
// ratio M(M+2)/(2M+1) grows linearly in M.
MilpInstance family_1row_vs_agg(long M);

}  // namespace cutlab
