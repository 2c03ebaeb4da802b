#include "cutlab/sparsifier.hpp"

#include "cutlab/error.hpp"
#include "cutlab/interval.hpp"
#include "cutlab/quadext.hpp"
#include "cutlab/rng.hpp"

#include <string>
#include <vector>

namespace cutlab {
namespace {

void require_unit_box(const QVec& x, const char* what) {
  for (const auto& c : x)
    if (c.sign() < 0 || c > Rational(1))
      throw domain_error(std::string("sparsifier: ") + what + " must lie in the unit box");
}

// Final defense: the returned rational cut is re-checked against every point
// of P and against u, independently of the acceptance arithmetic.
void assert_cut_exact(const Cut& cut, const VPolytope& P, const QVec& u) {
  for (const auto& p : P.points)
    if (!cut.satisfied_by(p))
      throw Error(Error::Code::internal, "sparsifier: returned cut violated by a point of P");
  if (!(cut_violation(cut, u) > Rational(0)))
    throw Error(Error::Code::internal, "sparsifier: returned cut fails to separate u");
}

}  // namespace

SparsifierInput make_sparsifier_input(const VPolytope& P, const QVec& u, int k, const Caps& caps) {
  const int n = P.dim;
  if (n < 1 || P.points.empty())
    throw domain_error("sparsifier: nonempty polytope required");
  if (static_cast<int>(u.size()) != n) throw domain_error("sparsifier: u arity mismatch");
  if (k < 1 || k > n) throw domain_error("sparsifier: k outside [1, n]");
  // Only P is normalized into the unit box; u may lie anywhere outside P
  // (the margin precondition typically forces it far outside the box).
  for (const auto& p : P.points) require_unit_box(p, "P");

  SparsifierInput inp;
  inp.P = P;
  inp.u = u;
  inp.k = k;
  DistanceResult d = sq_distance(u, P, caps);
  if (d.sq_dist.is_zero()) throw domain_error("sparsifier: u lies inside P");
  inp.v = d.nearest;
  inp.dir = sub(u, inp.v);
  inp.sq_lambda = d.sq_dist;

  // Margin precondition lambda > 4 lambda*: squaring both (nonnegative) sides
  // gives sq_lambda > (128 n / k) ln(4tn). ln(4tn) is irrational for t,n >= 1,
  // so a certified enclosure settles the strict inequality at some precision.
  const long t = static_cast<long>(P.points.size());
  const Rational factor(128L * n, static_cast<long>(k));
  const Rational four_tn(4L * t * n);
  for (unsigned terms : {40u, 80u, 160u, 320u}) {
    Interval ln = ln_enclosure(four_tn, terms);
    if (inp.sq_lambda > factor * ln.hi) return inp;
    if (inp.sq_lambda <= factor * ln.lo)
      throw domain_error("sparsifier: margin precondition fails: lambda^2 = " +
                         inp.sq_lambda.str() + " but (4 lambda*)^2 = (128n/k) ln(4tn) is at least " +
                         (factor * ln.lo).str());
  }
  throw Error(Error::Code::internal, "sparsifier: ln enclosure failed to settle the precondition");
}

SparsifyResult sparsify_cut(const SparsifierInput& inp, std::uint64_t seed, int max_draws) {
  const int n = inp.P.dim;
  const int k = inp.k;
  if (n < 1 || static_cast<int>(inp.dir.size()) != n || inp.sq_lambda.sign() <= 0)
    throw domain_error("sparsifier: malformed input (use make_sparsifier_input)");
  if (max_draws < 1) throw domain_error("sparsifier: max_draws must be positive");

  SparsifyResult res;

  // Direct path: dir is already k-sparse. The cut dir.x <= dir.v + sq_lambda/2
  // is dir.x <= dir.u - sq_lambda/2, valid because the nearest-point
  // certificate gives dir.p <= dir.v on P, and separating because
  // dir.u = dir.v + sq_lambda.
  if (support_size(inp.dir) <= k) {
    const Rational rhs = dot(inp.dir, inp.v) + inp.sq_lambda / Rational(2);
    for (const auto& p : inp.P.points)
      if (dot(inp.dir, p) > dot(inp.dir, inp.v))
        throw Error(Error::Code::internal, "sparsifier: nearest-point certificate violated");
    res.success = true;
    res.deterministic = true;
    res.cut.coeffs = inp.dir;
    res.cut.sense = Sense::le;
    res.cut.rhs = rhs;
    res.cut.provenance.generator = "sparsifier";
    res.cut.provenance.note = "direct: dir already k-sparse";
    assert_cut_exact(res.cut, inp.P, inp.u);
    return res;
  }

  // Sampling path. Work with w = lambda * d~ so the kept values are exact:
  // deterministic keeps contribute dir_i, sampled keeps contribute
  // +-(2/k) sqrt(m) with m = n * sq_lambda, and the acceptance threshold is
  // w.v + sq_lambda/2. Everything lives in Q(sqrt(m)).
  const Rational m = Rational(static_cast<long>(n)) * inp.sq_lambda;
  const Rational four_n(4L * n);
  const Rational k_sq(static_cast<long>(k) * k);

  // alpha |d_i| > 1  <=>  k^2 dir_i^2 > 4 n sq_lambda (both sides rational).
  std::vector<int> det_idx, cand_idx;
  for (int i = 0; i < n; ++i) {
    if (inp.dir[i].is_zero()) continue;  // kept with probability 0: skip
    if (k_sq * inp.dir[i] * inp.dir[i] > four_n * inp.sq_lambda)
      det_idx.push_back(i);
    else
      cand_idx.push_back(i);
  }

  const Rational root_mag(2L, static_cast<long>(k));  // |root coefficient| of sampled keeps
  const QuadExt threshold_margin = QuadExt::rat(inp.sq_lambda / Rational(2), m);

  Rng rng(seed);
  std::vector<int> kept;  // sampled keeps of the current round
  kept.reserve(cand_idx.size());

  for (int round = 1; round <= max_draws; ++round) {
    res.draws = round;
    kept.clear();
    for (int i : cand_idx) {
      // keep with probability alpha |d_i| = (k |dir_i|) / (2 sqrt(n) lambda):
      // r < alpha |d_i|  <=>  4 n sq_lambda r^2 < k^2 dir_i^2.
      const Rational r = rng.unit();
      if (four_n * inp.sq_lambda * r * r < k_sq * inp.dir[i] * inp.dir[i]) kept.push_back(i);
    }

    // w . x in Q(sqrt(m)): rational part from deterministic keeps, root part
    // from sampled keeps.
    auto dot_w = [&](const QVec& x) {
      Rational a(0), b(0);
      for (int i : det_idx) a += inp.dir[i] * x[i];
      for (int i : kept) {
        const Rational s = inp.dir[i].sign() > 0 ? root_mag : -root_mag;
        b += s * x[i];
      }
      return QuadExt{a, b, m};
    };

    const QuadExt rhs_w = dot_w(inp.v) + threshold_margin;
    bool ok_sparse = static_cast<int>(det_idx.size() + kept.size()) <= k;
    bool ok_valid = true;
    for (const auto& p : inp.P.points)
      if (dot_w(p) > rhs_w) {
        ok_valid = false;
        break;
      }
    bool ok_sep = dot_w(inp.u) > rhs_w;
    if (!ok_sparse) ++res.fail_sparse;
    if (!ok_valid) ++res.fail_valid;
    if (!ok_sep) ++res.fail_sep;
    if (!(ok_sparse && ok_valid && ok_sep)) continue;

    // Accepted: express w as a rational cut.
    res.success = true;
    res.cut.sense = Sense::le;
    res.cut.provenance.generator = "sparsifier";

    // sqrt(m) rational? (num and den of m both perfect squares)
    const mpz_class num = m.num(), den = m.den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
      mpz_class rn, rd;
      mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
      const Rational root(rn, rd);
      QVec w(n);
      for (int i : det_idx) w[i] = inp.dir[i];
      for (int i : kept) w[i] = (inp.dir[i].sign() > 0 ? root_mag : -root_mag) * root;
      res.cut.coeffs = std::move(w);
      res.cut.rhs = dot(res.cut.coeffs, inp.v) + inp.sq_lambda / Rational(2);
      res.cut.provenance.note = "sampled: rational root";
      assert_cut_exact(res.cut, inp.P, inp.u);
      return res;
    }

    if (det_idx.empty()) {
      // w = (2 sqrt(m)/k) * wbar with wbar in {-1,0,1}^n; positive scaling
      // preserves direction, so return wbar with the tightest valid rhs. The
      // accepted margin guarantees wbar still separates u; assert it anyway.
      QVec wbar(n);
      for (int i : kept) wbar[i] = Rational(inp.dir[i].sign() > 0 ? 1 : -1);
      Rational rhs = dot(wbar, inp.P.points.front());
      for (size_t j = 1; j < inp.P.points.size(); ++j)
        rhs = max(rhs, dot(wbar, inp.P.points[j]));
      if (!(dot(wbar, inp.u) > rhs))
        throw Error(Error::Code::internal, "sparsifier: scaled integer normal lost separation");
      res.cut.coeffs = std::move(wbar);
      res.cut.rhs = rhs;
      res.cut.provenance.note = "sampled: integer normal, tightest rhs";
      assert_cut_exact(res.cut, inp.P, inp.u);
      return res;
    }

    // Mixed coordinates with irrational sqrt(m): replace the root by a close
    // rational R and tighten the rhs to the max over P, which keeps the cut
    // valid by construction; the sq_lambda/2 margin leaves separation intact
    // for any reasonable precision, checked exactly before returning.
    for (unsigned bits : {96u, 192u, 384u}) {
      const Interval enc = sqrt_enclosure(m, bits);
      const Rational R = (enc.lo + enc.hi) / Rational(2);
      QVec w(n);
      for (int i : det_idx) w[i] = inp.dir[i];
      for (int i : kept) w[i] = (inp.dir[i].sign() > 0 ? root_mag : -root_mag) * R;
      Rational rhs = dot(w, inp.P.points.front());
      for (size_t j = 1; j < inp.P.points.size(); ++j) rhs = max(rhs, dot(w, inp.P.points[j]));
      if (dot(w, inp.u) > rhs) {
        res.cut.coeffs = std::move(w);
        res.cut.rhs = rhs;
        res.cut.provenance.note = "sampled: rounded root (" + std::to_string(bits) + " bits)";
        assert_cut_exact(res.cut, inp.P, inp.u);
        return res;
      }
    }
    throw Error(Error::Code::internal, "sparsifier: root rounding exhausted all precisions");
  }

  res.success = false;
  return res;
}

}  // namespace cutlab
