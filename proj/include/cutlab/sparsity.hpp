#pragma once

#include "cutlab/caps.hpp"
#include "cutlab/interval.hpp"
#include "cutlab/polytope.hpp"

namespace cutlab {

// Best outer approximation of P = conv(points) c [0,1]^n by cuts with at most
// k nonzero coefficients: the box intersected with the lifted facets of every
// k-coordinate projection of P (lexicographic subset order). Exact H-rep.
// Errors: P not inside the unit box, k out of [1, n], n over the dim cap.
HPolytope sparse_closure(const VPolytope& P, int k, const Caps& caps = {});

struct DistPkResult {
  Rational sq_dist;  // max over x in P^k of the squared distance to P
  QVec witness;      // vertex of P^k attaining it
};

// The squared sparse-approximation distance max_{x in P^k} min_{y in P}
// |x - y|^2. The inner min is a convex function of x, so the max is attained
// at a vertex of P^k; every vertex is scanned with a cheap upper-bound prune
// (the distance to P is at most the distance to any single point of P).
DistPkResult dist_pk(const VPolytope& P, int k, const Caps& caps = {});

// Certified enclosures of min{ 8 sqrt(n/k) sqrt(2 ln(4tn)),
// 2 sqrt(n) (n/k - 1) } and of both terms (natural logarithm). The interval
// hi end is a certified upper bound on the true value; comparisons of exact
// squared distances against the bound go through certified_sq_le, which uses
// the lo end, so a "pass" certifies the inequality against the true value.
struct Theorem1Bound {
  Interval bound;
  Interval term1;
  Interval term2;
};

// Requires n >= 2, 1 <= k <= n, t >= 1.
Theorem1Bound theorem1_bound(int n, int k, int t);

}  // namespace cutlab
