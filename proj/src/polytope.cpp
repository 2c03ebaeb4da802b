#include "cutlab/polytope.hpp"

#include "cutlab/error.hpp"
#include "cutlab/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>

namespace cutlab {

namespace {

struct Mask {
  std::vector<std::uint64_t> w;

  explicit Mask(int bits = 0) : w((bits + 63) / 64, 0) {}
  void set(int i) { w[i / 64] |= 1ULL << (i % 64); }
  static Mask and_of(const Mask& a, const Mask& b) {
    Mask r;
    r.w.resize(a.w.size());
    for (std::size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
  template <typename F>
  void for_each(F f) const {
    for (std::size_t k = 0; k < w.size(); ++k)
      for (std::uint64_t bits = w[k]; bits; bits &= bits - 1)
        f(static_cast<int>(k * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
  }
};

struct DDVertex {
  QVec x;
  Mask tight;
};

std::string key_of(const QVec& v) {
  std::string k;
  for (const auto& q : v) { k += q.str(); k += ','; }
  return k;
}

// Canonical form of (a, b) under positive scaling: divide by |first nonzero of a|.
std::pair<QVec, Rational> canon_ineq(QVec a, Rational b) {
  for (const auto& x : a)
    if (!x.is_zero()) {
      Rational s = Rational(1) / abs(x);
      for (auto& y : a) y *= s;
      b *= s;
      break;
    }
  return {std::move(a), std::move(b)};
}

}  // namespace

VPolytope enumerate_vertices(const HPolytope& poly, const Caps& caps) {
  int n = poly.dim;
  if (n > caps.vertex_enum_dim)
    throw cap_error("enumerate_vertices: dimension " + std::to_string(n) + " exceeds cap " +
                    std::to_string(caps.vertex_enum_dim));

  if (n == 0) {
    for (const auto& r : poly.rows)
      if (!r.satisfied_by(QVec{})) return {0, {}};
    return {0, {QVec{}}};
  }

  // Exact bounding box via per-coordinate LPs; also settles feasibility.
  QVec lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    QVec e(n);
    e[j] = Rational(1);
    LpResult mn = solve_lp(poly, false, e, Opt::min);
    if (mn.status == LpStatus::infeasible) return {n, {}};
    LpResult mx = solve_lp(poly, false, e, Opt::max);
    if (mn.status == LpStatus::unbounded || mx.status == LpStatus::unbounded)
      throw Error(Error::Code::unbounded, "enumerate_vertices: polytope is unbounded");
    lo[j] = mn.value;
    hi[j] = mx.value;
  }

  // All rows as <=: box rows first (2n), then the polytope rows, deduped by
  // canonical normal keeping the tightest rhs.
  QMat normals;
  QVec rhss;
  for (int j = 0; j < n; ++j) {
    QVec up(n), dn(n);
    up[j] = Rational(1);
    dn[j] = Rational(-1);
    normals.push_back(up);
    rhss.push_back(hi[j]);
    normals.push_back(dn);
    rhss.push_back(-lo[j]);
  }
  std::map<std::string, int> seen;
  for (int j = 0; j < 2 * n; ++j) {
    auto [ca, cb] = canon_ineq(normals[j], rhss[j]);
    seen[key_of(ca)] = j;
  }
  auto push_le = [&](QVec a, Rational b) {
    auto [ca, cb] = canon_ineq(a, b);
    std::string k = key_of(ca);
    auto it = seen.find(k);
    if (it != seen.end()) {
      auto [oa, ob] = canon_ineq(normals[it->second], rhss[it->second]);
      if (cb < ob) { normals[it->second] = std::move(a); rhss[it->second] = std::move(b); }
      return;
    }
    seen[k] = static_cast<int>(normals.size());
    normals.push_back(std::move(a));
    rhss.push_back(std::move(b));
  };
  for (const auto& r : poly.rows) {
    bool zero = std::all_of(r.coeffs.begin(), r.coeffs.end(),
                            [](const Rational& x) { return x.is_zero(); });
    if (zero) continue;  // consistency already settled by the LPs
    if (r.sense == Sense::le || r.sense == Sense::eq) push_le(r.coeffs, r.rhs);
    if (r.sense == Sense::ge || r.sense == Sense::eq) {
      QVec neg(r.coeffs);
      for (auto& x : neg) x = -x;
      push_le(std::move(neg), -r.rhs);
    }
  }
  int total_rows = static_cast<int>(normals.size());

  // Box corners seed the double description pass.
  std::vector<DDVertex> verts;
  {
    std::vector<int> free_dims;
    for (int j = 0; j < n; ++j)
      if (lo[j] != hi[j]) free_dims.push_back(j);
    std::size_t combos = std::size_t{1} << free_dims.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
      DDVertex v;
      v.x = lo;
      v.tight = Mask(total_rows);
      for (std::size_t k = 0; k < free_dims.size(); ++k)
        if (mask & (std::size_t{1} << k)) v.x[free_dims[k]] = hi[free_dims[k]];
      for (int j = 0; j < n; ++j) {
        if (v.x[j] == hi[j]) v.tight.set(2 * j);
        if (v.x[j] == lo[j]) v.tight.set(2 * j + 1);
      }
      verts.push_back(std::move(v));
    }
  }

  auto full_tight = [&](const QVec& x, int upto) {
    Mask m(total_rows);
    for (int r = 0; r < upto; ++r)
      if (dot(normals[r], x) == rhss[r]) m.set(r);
    return m;
  };

  for (int r = 2 * n; r < total_rows; ++r) {
    QVec slack(verts.size());
    bool any_viol = false;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      slack[i] = rhss[r] - dot(normals[r], verts[i].x);
      if (slack[i].sign() < 0) any_viol = true;
      if (slack[i].is_zero()) verts[i].tight.set(r);
    }
    if (!any_viol) continue;

    std::vector<DDVertex> next;
    std::set<std::string> have;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (slack[i].sign() >= 0) {
        have.insert(key_of(verts[i].x));
        next.push_back(verts[i]);
      }
    std::size_t fresh_from = next.size();

    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (slack[i].sign() <= 0) continue;
      for (std::size_t k = 0; k < verts.size(); ++k) {
        if (slack[k].sign() >= 0) continue;
        Mask common = Mask::and_of(verts[i].tight, verts[k].tight);
        if (common.count() < n - 1) continue;
        QMat rows;
        common.for_each([&](int idx) { rows.push_back(normals[idx]); });
        if (rank(std::move(rows)) != n - 1) continue;  // not an edge
        Rational theta = slack[i] / (slack[i] - slack[k]);
        QVec z = add(verts[i].x, scale(sub(verts[k].x, verts[i].x), theta));
        if (have.insert(key_of(z)).second) next.push_back({std::move(z), Mask(total_rows)});
      }
    }
    // Exact tight sets for the fresh vertices (coincidental tightness included).
    for (std::size_t i = fresh_from; i < next.size(); ++i)
      next[i].tight = full_tight(next[i].x, r + 1);
    verts = std::move(next);
    if (verts.empty()) return {n, {}};
  }

  VPolytope out;
  out.dim = n;
  for (auto& v : verts) out.points.push_back(std::move(v.x));
  std::sort(out.points.begin(), out.points.end());
  return out;
}

bool hull_contains(const VPolytope& v, const QVec& x) {
  if (v.points.empty()) return false;
  int t = static_cast<int>(v.points.size());
  HPolytope lp;
  lp.dim = t;
  for (int c = 0; c < v.dim; ++c) {
    LinearRow row;
    row.sense = Sense::eq;
    row.rhs = x[c];
    for (int i = 0; i < t; ++i) row.coeffs.push_back(v.points[i][c]);
    lp.rows.push_back(std::move(row));
  }
  LinearRow sum;
  sum.sense = Sense::eq;
  sum.rhs = Rational(1);
  sum.coeffs.assign(t, Rational(1));
  lp.rows.push_back(std::move(sum));
  return solve_lp(lp, true, QVec(t), Opt::max).status == LpStatus::optimal;
}

VPolytope canonicalize(VPolytope v) {
  std::set<QVec> uniq(v.points.begin(), v.points.end());

  bool integral = true;
  for (const auto& p : uniq)
    for (const auto& c : p)
      if (!c.is_integer()) { integral = false; break; }

  std::vector<QVec> pts;
  if (integral && v.dim > 0) {
    // Lattice midpoint prune: a point with both axis neighbours present is
    // interior to their segment and can never be a vertex.
    for (const auto& p : uniq) {
      bool mid = false;
      for (int j = 0; j < v.dim && !mid; ++j) {
        QVec up(p), dn(p);
        up[j] += Rational(1);
        dn[j] -= Rational(1);
        mid = uniq.count(up) > 0 && uniq.count(dn) > 0;
      }
      if (!mid) pts.push_back(p);
    }
  } else {
    pts.assign(uniq.begin(), uniq.end());
  }

  // Exact vertex test against the current survivors.
  std::vector<QVec> kept = pts;
  for (std::size_t i = 0; i < kept.size();) {
    VPolytope others;
    others.dim = v.dim;
    for (std::size_t k = 0; k < kept.size(); ++k)
      if (k != i) others.points.push_back(kept[k]);
    if (hull_contains(others, kept[i]))
      kept.erase(kept.begin() + i);
    else
      ++i;
  }
  return {v.dim, std::move(kept)};
}

VPolytope project_polytope(const VPolytope& v, const std::vector<int>& coords) {
  VPolytope out;
  out.dim = static_cast<int>(coords.size());
  for (int c : coords)
    if (c < 0 || c >= v.dim) throw domain_error("project_polytope: coordinate out of range");
  for (const auto& p : v.points) {
    QVec q;
    for (int c : coords) q.push_back(p[c]);
    out.points.push_back(std::move(q));
  }
  return canonicalize(std::move(out));
}

HPolytope convex_hull_facets(const std::vector<QVec>& points, const std::vector<QVec>& rays,
                             int dim) {
  if (points.empty()) throw domain_error("convex_hull_facets: no points");
  HPolytope out;
  out.dim = dim;

  QMat dirs;
  for (std::size_t i = 1; i < points.size(); ++i) dirs.push_back(sub(points[i], points[0]));
  for (const auto& r : rays) dirs.push_back(r);

  // Affine hull as equality rows.
  for (const auto& nv : nullspace(dirs, dim)) {
    LinearRow row;
    row.coeffs = nv;
    row.sense = Sense::eq;
    row.rhs = dot(nv, points[0]);
    out.rows.push_back(std::move(row));
  }

  // Independent direction basis.
  QMat basis;
  for (const auto& d : dirs) {
    if (std::all_of(d.begin(), d.end(), [](const Rational& x) { return x.is_zero(); })) continue;
    QMat a(dim, QVec(basis.size()));
    for (int r = 0; r < dim; ++r)
      for (std::size_t k = 0; k < basis.size(); ++k) a[r][k] = basis[k][r];
    if (basis.empty() || !solve_any(a, d)) basis.push_back(d);
  }
  int rho = static_cast<int>(basis.size());
  if (rho == 0) return out;  // single point, equalities say it all

  // Coordinate rows R with invertible basis submatrix, via pivot columns.
  QMat bm = basis;
  std::vector<int> ridx;
  {
    QMat tmp = bm;
    // echelon by hand: reuse rank-style elimination to find pivot columns
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < dim && row < rho; ++col) {
      int piv = -1;
      for (int r = row; r < rho; ++r)
        if (!tmp[r][col].is_zero()) { piv = r; break; }
      if (piv < 0) continue;
      std::swap(tmp[row], tmp[piv]);
      Rational inv = Rational(1) / tmp[row][col];
      for (auto& x : tmp[row]) x *= inv;
      for (int r = 0; r < rho; ++r) {
        if (r == row || tmp[r][col].is_zero()) continue;
        Rational f = tmp[r][col];
        for (int c = col; c < dim; ++c) tmp[r][c] -= f * tmp[row][c];
      }
      pivots.push_back(col);
      ++row;
    }
    ridx = pivots;
  }
  if (static_cast<int>(ridx.size()) != rho)
    throw Error(Error::Code::internal, "convex_hull_facets: basis extraction failed");

  // S[l][k] = basis_k[ridx[l]]; y-coords solve S y = (x - p0) restricted to ridx.
  QMat S(rho, QVec(rho));
  for (int l = 0; l < rho; ++l)
    for (int k = 0; k < rho; ++k) S[l][k] = basis[k][ridx[l]];

  auto to_y = [&](const QVec& delta) {
    QVec b(rho);
    for (int l = 0; l < rho; ++l) b[l] = delta[ridx[l]];
    auto y = solve_square(S, b);
    if (!y) throw Error(Error::Code::internal, "convex_hull_facets: singular basis");
    return *y;
  };

  // Homogenized generators in y-space.
  QMat gens;
  for (const auto& p : points) {
    QVec y = to_y(sub(p, points[0]));
    y.push_back(Rational(1));
    gens.push_back(std::move(y));
  }
  for (const auto& r : rays) {
    QVec y = to_y(r);
    y.push_back(Rational(0));
    gens.push_back(std::move(y));
  }
  // Dedupe generators to keep the subset enumeration small.
  {
    std::set<std::string> keys;
    QMat uniq;
    for (auto& g : gens) {
      auto [cg, cb] = canon_ineq(g, Rational(0));
      if (keys.insert(key_of(cg)).second) uniq.push_back(g);
    }
    gens = std::move(uniq);
  }
  int g = static_cast<int>(gens.size());
  if (g > 42) throw cap_error("convex_hull_facets: too many generators (" + std::to_string(g) + ")");

  std::set<std::string> emitted;
  std::vector<int> comb(rho);
  for (int i = 0; i < rho; ++i) comb[i] = i;
  auto advance = [&]() {
    int i = rho - 1;
    while (i >= 0 && comb[i] == g - rho + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int k = i + 1; k < rho; ++k) comb[k] = comb[k - 1] + 1;
    return true;
  };
  if (rho <= g) do {
    QMat sub_rows;
    for (int i : comb) sub_rows.push_back(gens[i]);
    auto ns = nullspace(sub_rows, rho + 1);
    if (ns.size() != 1) continue;
    QVec v = ns[0];
    bool alpha_zero = std::all_of(v.begin(), v.end() - 1,
                                  [](const Rational& x) { return x.is_zero(); });
    if (alpha_zero) continue;
    int pos = 0, neg = 0;
    for (const auto& gv : gens) {
      int s = dot(v, gv).sign();
      if (s > 0) ++pos;
      if (s < 0) ++neg;
    }
    if (pos > 0 && neg > 0) continue;
    if (pos > 0)
      for (auto& x : v) x = -x;  // orient to alpha y <= beta

    QVec alpha(v.begin(), v.end() - 1);
    Rational beta = -v[rho];
    auto [ca, cb] = canon_ineq(alpha, beta);
    QVec keyv = ca;
    keyv.push_back(cb);
    if (!emitted.insert(key_of(keyv)).second) continue;

    // Lift: w solves S^T w = alpha; row is w . x_R <= beta + w . p0_R.
    QMat St(rho, QVec(rho));
    for (int l = 0; l < rho; ++l)
      for (int k = 0; k < rho; ++k) St[l][k] = S[k][l];
    auto w = solve_square(St, alpha);
    if (!w) throw Error(Error::Code::internal, "convex_hull_facets: lift failed");
    LinearRow row;
    row.coeffs.assign(dim, Rational(0));
    Rational shift;
    for (int l = 0; l < rho; ++l) {
      row.coeffs[ridx[l]] = (*w)[l];
      shift += (*w)[l] * points[0][ridx[l]];
    }
    row.sense = Sense::le;
    row.rhs = beta + shift;
    out.rows.push_back(std::move(row));
  } while (advance());

  return out;
}

}  // namespace cutlab
