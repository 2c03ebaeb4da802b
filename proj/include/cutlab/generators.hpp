#pragma once

#include "cutlab/instance.hpp"
#include "cutlab/selection.hpp"
#include "cutlab/simplex.hpp"
#include "cutlab/sparsifier.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cutlab {

// Instance generators. All are pure functions of their arguments (same inputs
// give byte-identical instances), every variable carries an explicit finite
// bound so brute-force oracles terminate, and each instance is tagged by
// classify() plus any structural tags noted below.

// Partition <-> tag plumbing so block structure survives JSON round-trips.
// Tag format: "blocks:0,1;2,3" (comma inside a block, ';' between blocks).
std::string partition_tag(const Partition& part);
bool has_partition_tag(const MilpInstance& inst);
Partition partition_from_tag(const MilpInstance& inst);

// Packing instance already in pre-processed form: all rows <=, 0 <= A_ij <=
// b_i with b_i in [2,9], integer variables with upper bounds in [1,3] (bounds
// >= 1 keep the bound rows themselves pre-processed packing rows), c >= 0.
MilpInstance gen_preprocessed_packing(int n, int m, std::uint64_t seed);

// Raw packing instance, NOT necessarily pre-processed: A_ij in [0,9], b_i in
// [0,9], so some columns may violate A_ij <= b_i (preprocess_packing input).
MilpInstance gen_random_packing(int n, int m, std::uint64_t seed);

// Mixed bounded MILP with a planted feasible point; each variable is integer
// with probability 3/4, coefficients in [-4,4], senses mixed <=/>=/=.
MilpInstance gen_random_bounded_milp(int n, int m, std::uint64_t seed);

// Bounded pure-integer instance with a planted feasible point (Gomory input);
// senses <= / >= only.
MilpInstance gen_random_pure_ip(int n, int m, std::uint64_t seed);

// Covering instance: >= rows with nonnegative data, feasible at the upper
// bounds by construction, c >= 0.
MilpInstance gen_random_covering(int n, int m, std::uint64_t seed);

// Two-stage stochastic packing: one first-stage block plus k scenario blocks
// (sizes[0] = first-stage size, sizes[i] = scenario i size, k <= 6, each size
// in [1,4]). Every coupling row touches the first-stage block and exactly one
// scenario block, so the interaction graph under two_stage_partition is the
// star K_{1,k}. Pre-processed packing data, c >= 0. Tags include "two-stage"
// and the partition tag.
MilpInstance gen_two_stage_packing(int k, const std::vector<int>& sizes, std::uint64_t seed);
Partition two_stage_partition(int k, const std::vector<int>& sizes);

// Market split: m equality rows over n binary variables, coefficients uniform
// in [0,99], rhs_i = floor(row sum / 2), all-ones objective. Derived seeds are
// retried until the instance is integer-feasible with a fractional LP optimum
// (z_LP > z_I), so every returned instance has a positive integrality gap.
MilpInstance gen_market_split(int m, int n, std::uint64_t seed);

// Random equality-form pure-integer instance; coefficients in [-5,5] and
// rhs = A*xhat for a planted point xhat, so integer feasibility is guaranteed.
MilpInstance gen_random_equality(int n, int m, std::uint64_t seed);

// Sign-pattern instance: each column keeps one sign across all <= rows,
// roughly half the columns negative, bounded integer variables, feasible at a
// planted point, c >= 0.
MilpInstance gen_sign_pattern(int n, int m, std::uint64_t seed);

// Packing instance over q blocks of bs variables each: one row inside every
// block plus random two-block coupling rows. Pre-processed data, c >= 0.
// The contiguous partition is returned through part (if non-null) and also
// carried as a tag.
MilpInstance gen_partitioned_packing(int q, int bs, std::uint64_t seed, Partition* part = nullptr);

// t distinct random 0/1 points in dimension n (t <= 2^n required).
VPolytope gen_01_vpolytope(int n, int t, std::uint64_t seed);

// Sparsification test family in dimension 16, certified to satisfy the margin
// precondition: index selects k in {10,12,14} and t in 1..6; the polytope's
// points sit inside the unit box at v - sign(dir) * delta (delta_i in
// {0,1/4}, first point = v) and u = v + dir with dir_i = +-10, which makes v
// the nearest point, sq_lambda = 1600, and n*sq_lambda a perfect square.
SparsifierInput gen_sparsifier_spec(int index, std::uint64_t seed);

// Cut pool with `size` cuts over two recorded fractional points; every cut
// separates at least one of them by construction. The mix includes
// near-parallel pairs (to exercise the parallelism filter) and occasional
// wildly-scaled coefficients (to exercise the dynamism filter).
CutPool gen_cut_pool(int n, int size, std::uint64_t seed);

// CLI dispatcher. Kinds: 2ssp, market-split, random-equality, random-packing,
// preprocessed-packing, sign-pattern, random-milp, pure-ip, covering,
// partitioned-packing, cancel-family. Missing params fall back to documented
// defaults; out-of-range params and unknown kinds are domain errors.
MilpInstance generate(const std::string& kind, const std::map<std::string, long>& params,
                      std::uint64_t seed);

}  // namespace cutlab
