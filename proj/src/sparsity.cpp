#include "cutlab/sparsity.hpp"

#include "cutlab/error.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cutlab {
namespace {

// Unique positive-scaling canonical form of a row, for deduping identical
// constraints contributed by overlapping projections.
std::string row_key(const LinearRow& r) {
  mpz_class l = 1;
  auto lcm_den = [&l](const Rational& q) {
    mpz_class t;
    mpz_lcm(t.get_mpz_t(), l.get_mpz_t(), q.den().get_mpz_t());
    l = t;
  };
  for (const auto& c : r.coeffs) lcm_den(c);
  lcm_den(r.rhs);
  std::vector<mpz_class> z;
  z.reserve(r.coeffs.size() + 1);
  mpz_class g = 0;
  auto push = [&](const Rational& q) {
    mpz_class v = q.num() * (l / q.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    z.push_back(v);
  };
  for (const auto& c : r.coeffs) push(c);
  push(r.rhs);
  if (g == 0) g = 1;
  std::string key = sense_str(r.sense);
  for (const auto& v : z) {
    key += ',';
    key += mpz_class(v / g).get_str();
  }
  return key;
}

}  // namespace

HPolytope sparse_closure(const VPolytope& P, int k, const Caps& caps) {
  const int n = P.dim;
  if (n < 1 || P.points.empty()) throw domain_error("sparse_closure: nonempty polytope required");
  if (k < 1 || k > n) throw domain_error("sparse_closure: k outside [1, n]");
  if (n > caps.vertex_enum_dim)
    throw cap_error("sparse_closure: dimension " + std::to_string(n) + " exceeds cap " +
                    std::to_string(caps.vertex_enum_dim));
  for (const auto& p : P.points) {
    if (static_cast<int>(p.size()) != n) throw domain_error("sparse_closure: point arity mismatch");
    for (const auto& c : p)
      if (c.sign() < 0 || c > Rational(1))
        throw domain_error("sparse_closure: polytope must lie in the unit box");
  }

  HPolytope out;
  out.dim = n;
  std::set<std::string> seen;
  auto add = [&](LinearRow row) {
    if (seen.insert(row_key(row)).second) out.rows.push_back(std::move(row));
  };

  for (int j = 0; j < n; ++j) {
    LinearRow up{QVec(n), Sense::le, Rational(1)};
    up.coeffs[j] = Rational(1);
    add(std::move(up));
    LinearRow dn{QVec(n), Sense::ge, Rational(0)};
    dn.coeffs[j] = Rational(1);
    add(std::move(dn));
  }

  // Every k-subset of coordinates in lexicographic order: the projection's
  // facet and affine-hull rows, lifted back by zero-padding. Intersecting all
  // of them with the box is exactly the set of points whose every k-coordinate
  // shadow is achievable, i.e. the closure under k-sparse valid cuts.
  std::vector<int> subset(k);
  for (int i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    VPolytope proj = project_polytope(P, subset);
    HPolytope facets = convex_hull_facets(proj.points, {}, k);
    for (const auto& f : facets.rows) {
      LinearRow lifted{QVec(n), f.sense, f.rhs};
      for (int i = 0; i < k; ++i) lifted.coeffs[subset[i]] = f.coeffs[i];
      add(std::move(lifted));
    }
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return out;
}

DistPkResult dist_pk(const VPolytope& P, int k, const Caps& caps) {
  HPolytope closure = sparse_closure(P, k, caps);
  VPolytope verts = enumerate_vertices(closure, caps);
  if (verts.points.empty())
    throw Error(Error::Code::internal, "dist_pk: closure lost all vertices");

  DistPkResult best{Rational(0), verts.points.front()};
  bool have = false;
  for (const auto& x : verts.points) {
    // dist(x, P)^2 is at most the squared distance to any one point of P;
    // skip the exact projection when that bound cannot beat the incumbent.
    Rational ub = sq_norm(sub(x, P.points.front()));
    for (size_t i = 1; i < P.points.size(); ++i)
      ub = min(ub, sq_norm(sub(x, P.points[i])));
    if (have && ub <= best.sq_dist) continue;
    DistanceResult d = sq_distance(x, P, caps);
    if (!have || d.sq_dist > best.sq_dist) {
      best.sq_dist = d.sq_dist;
      best.witness = x;
      have = true;
    }
  }
  return best;
}

Theorem1Bound theorem1_bound(int n, int k, int t) {
  if (n < 2) throw domain_error("theorem1_bound: n >= 2 required");
  if (k < 1 || k > n) throw domain_error("theorem1_bound: k outside [1, n]");
  if (t < 1) throw domain_error("theorem1_bound: t >= 1 required");

  // Outward-rounded sqrt of a nonnegative interval.
  auto sqrt_iv = [](const Interval& iv) {
    return Interval{sqrt_enclosure(iv.lo).lo, sqrt_enclosure(iv.hi).hi};
  };

  Interval two_ln = iv_scale(ln_enclosure(Rational(4L * t * n)), Rational(2));
  Interval term1 =
      iv_scale(iv_mul(sqrt_enclosure(Rational(n, k)), sqrt_iv(two_ln)), Rational(8));
  Interval term2 =
      iv_scale(sqrt_enclosure(Rational(n)), Rational(2) * (Rational(n, k) - Rational(1)));
  return {iv_min(term1, term2), term1, term2};
}

}  // namespace cutlab
