#pragma once

#include "cutlab/caps.hpp"
#include "cutlab/cuts.hpp"
#include "cutlab/polytope.hpp"

#include <cstdint>

namespace cutlab {

// Input to the cut sparsifier: P = conv(p^1..p^t) inside [0,1]^n, a point
// u anywhere outside P, the target sparsity k, and data derived once from
// them. (Only P is box-normalized; the margin precondition usually places u
// well outside the box.)
// The unit separating direction d = (u - v)/lambda is held unnormalized as
// dir = u - v together with sq_lambda = |dir|^2, so everything stays rational.
struct SparsifierInput {
  VPolytope P;
  QVec u;
  int k = 0;
  QVec v;              // nearest point of P to u
  QVec dir;            // u - v
  Rational sq_lambda;  // |u - v|^2 > 0
};

// Derives v / dir / sq_lambda and certifies the margin precondition
// lambda > 4 lambda*, lambda* = (2 sqrt(n)/sqrt(k)) sqrt(2 ln(4tn)), via the
// equivalent rational test sq_lambda > (128 n / k) ln(4tn) against certified
// ln enclosures (t = number of points of P). Errors: u inside P, P outside
// the unit box, k outside [1, n], margin precondition violated (the error
// message reports both sides).
SparsifierInput make_sparsifier_input(const VPolytope& P, const QVec& u, int k,
                                      const Caps& caps = {});

struct SparsifyResult {
  bool success = false;
  Cut cut;                     // k-sparse, valid for P, separates u (on success)
  int draws = 0;               // sampling rounds consumed (0 on the direct path)
  int fail_sparse = 0;         // rounds with support larger than k
  int fail_valid = 0;          // rounds where some w.p_i exceeded w.v + lambda^2/2
  int fail_sep = 0;            // rounds where w.u fell short of that threshold
  bool deterministic = false;  // dir itself was k-sparse; no sampling happened
};

// Randomized sparsification of the separating direction d with
// alpha = k/(2 sqrt(n)): coordinates with alpha |d_i| > 1 are kept at d_i
// deterministically, the rest keep sign(d_i)/alpha with probability
// alpha |d_i| and drop to 0 otherwise (a zero coordinate can never be kept, so
// no draw is spent on it). A round is accepted only if the lambda-scaled
// vector w = lambda d~ is k-sparse, satisfies w.p_i <= w.v + sq_lambda/2 on
// every point of P, and w.u exceeds that threshold; all three checks are
// exact in Q(sqrt(n * sq_lambda)). Accepted directions come back as rational
// cuts: verbatim when sqrt(n * sq_lambda) is rational, as the equivalent
// {-1,0,1} normal with the tightest valid rhs when no deterministic
// coordinate was kept, otherwise via a rational rounding of the root whose
// validity and separation are re-verified exactly before returning. After
// max_draws rejected rounds the result reports failure plus per-property
// rejection counts instead of throwing.
SparsifyResult sparsify_cut(const SparsifierInput& inp, std::uint64_t seed, int max_draws = 1000);

}  // namespace cutlab
