#include "cutlab/error.hpp"
#include "cutlab/linalg.hpp"
#include "cutlab/polytope.hpp"

namespace cutlab {

// Exact nearest point in conv(points): the minimizer lies in the relative
// interior of a face and is the affine projection onto any independent subset
// spanning that face, so scanning all affinely independent subsets and keeping
// feasible minimizers is exhaustive.
DistanceResult sq_distance(const QVec& x, const VPolytope& v, const Caps& caps) {
  int t = static_cast<int>(v.points.size());
  if (t == 0) throw domain_error("sq_distance: empty polytope");
  if (t > caps.distance_points)
    throw cap_error("sq_distance: " + std::to_string(t) + " vertices exceed cap " +
                    std::to_string(caps.distance_points));
  int n = v.dim;
  if (static_cast<int>(x.size()) != n) throw domain_error("sq_distance: dimension mismatch");

  bool found = false;
  Rational best;
  QVec witness;

  auto consider = [&](const QVec& y) {
    Rational d2 = sq_norm(sub(x, y));
    if (!found || d2 < best) {
      found = true;
      best = d2;
      witness = y;
    }
  };

  for (int p = 0; p < t; ++p) consider(v.points[p]);

  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << t); ++mask) {
    int size = __builtin_popcountll(mask);
    if (size < 2 || size > n + 1) continue;
    std::vector<int> idx;
    for (int p = 0; p < t; ++p)
      if (mask & (std::uint64_t{1} << p)) idx.push_back(p);

    const QVec& q0 = v.points[idx[0]];
    int s = size - 1;
    QMat dirs;
    for (int i = 1; i <= s; ++i) dirs.push_back(sub(v.points[idx[i]], q0));

    QMat gram(s, QVec(s));
    QVec rhs(s);
    QVec xq = sub(x, q0);
    for (int i = 0; i < s; ++i) {
      for (int j = i; j < s; ++j) gram[i][j] = gram[j][i] = dot(dirs[i], dirs[j]);
      rhs[i] = dot(dirs[i], xq);
    }
    auto mu = solve_square(gram, rhs);
    if (!mu) continue;  // affinely dependent subset; a spanning one covers it

    Rational sum;
    bool feas = true;
    for (int i = 0; i < s; ++i) {
      if ((*mu)[i].sign() < 0) { feas = false; break; }
      sum += (*mu)[i];
    }
    if (!feas || sum > Rational(1)) continue;

    QVec y = q0;
    for (int i = 0; i < s; ++i) y = add(y, scale(dirs[i], (*mu)[i]));
    consider(y);
  }

  // Optimality certificate: (x - y) . (p - y) <= 0 for all vertices p.
  QVec dir = sub(x, witness);
  for (const auto& p : v.points)
    if (dot(dir, sub(p, witness)).sign() > 0)
      throw Error(Error::Code::internal, "sq_distance: optimality certificate failed");

  return {best, witness};
}

}  // namespace cutlab
