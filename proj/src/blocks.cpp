#include "cutlab/blocks.hpp"

#include "cutlab/error.hpp"
#include "cutlab/polytope.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace cutlab {
namespace {

void require_tag(const MilpInstance& inst, const std::string& tag, const char* who) {
  auto tags = classify(inst);
  if (std::find(tags.begin(), tags.end(), tag) == tags.end())
    throw domain_error(std::string(who) + ": instance is not " + tag);
}

bool feasible_point(const MilpInstance& inst, const QVec& x) {
  for (const auto& r : inst.rows)
    if (!r.satisfied_by(x)) return false;
  for (int j = 0; j < inst.n; ++j) {
    if (x[j] < inst.vars[j].lb) return false;
    if (inst.vars[j].ub && x[j] > *inst.vars[j].ub) return false;
    if (inst.vars[j].kind == VarKind::integer && !x[j].is_integer()) return false;
  }
  return true;
}

// Integer hull plus the closure H-rep: LP rows and, per support set, the
// lifted facets of the hull's projection onto that set's variables.
struct BlockClosure {
  VPolytope hull;
  HPolytope closure;
};

BlockClosure build_block_closure(const MilpInstance& inst, const Partition& part,
                                 const SupportList& supports, const Caps& caps) {
  inst.validate();
  part.validate(inst.n);
  require_tag(inst, "packing", "block_sparse_closure");
  if (!inst.all_bounded()) throw domain_error("block_sparse_closure: unbounded variables");
  if (supports.empty()) throw domain_error("block_sparse_closure: empty support list");
  const int q = static_cast<int>(part.blocks.size());

  BlockClosure bc;
  bc.hull = integer_hull(inst, caps);
  if (bc.hull.points.empty())
    throw Error(Error::Code::infeasible, "block_sparse_closure: empty integer hull");

  bc.closure = lp_relaxation(inst);
  for (const auto& S : supports) {
    if (S.empty()) throw domain_error("block_sparse_closure: empty support set");
    std::set<int> cols_set;
    for (int v : S) {
      if (v < 0 || v >= q) throw domain_error("block_sparse_closure: support node out of range");
      cols_set.insert(part.blocks[v].begin(), part.blocks[v].end());
    }
    std::vector<int> cols(cols_set.begin(), cols_set.end());
    VPolytope proj = project_polytope(bc.hull, cols);
    HPolytope facets = convex_hull_facets(proj.points, {}, static_cast<int>(cols.size()));
    for (const auto& f : facets.rows) {
      LinearRow lifted{QVec(inst.n), f.sense, f.rhs};
      for (size_t i = 0; i < cols.size(); ++i) lifted.coeffs[cols[i]] = f.coeffs[i];
      bc.closure.rows.push_back(std::move(lifted));
    }
  }
  return bc;
}

Rational hull_max(const VPolytope& hull, const QVec& c) {
  Rational best = dot(c, hull.points.front());
  for (size_t i = 1; i < hull.points.size(); ++i) best = max(best, dot(c, hull.points[i]));
  return best;
}

Rational closure_max(const HPolytope& closure, const QVec& c) {
  LpResult r = solve_lp(closure, true, c, Opt::max);
  if (r.status != LpStatus::optimal)
    throw Error(Error::Code::internal, "block_sparse_closure: closure LP not optimal");
  return r.value;
}

void require_nonneg(const QVec& c, int n, const char* who) {
  if (static_cast<int>(c.size()) != n) throw domain_error(std::string(who) + ": objective arity mismatch");
  for (const auto& v : c)
    if (v.sign() < 0) throw domain_error(std::string(who) + ": objective must be nonnegative");
}

}  // namespace

InteractionGraph interaction_graph(const MilpInstance& inst, const Partition& part) {
  inst.validate();
  part.validate(inst.n);
  const int q = static_cast<int>(part.blocks.size());
  InteractionGraph g;
  g.q = q;
  g.adj.assign(q, std::vector<bool>(q, false));
  for (const auto& row : inst.rows) {
    std::vector<int> touched;
    for (int b = 0; b < q; ++b)
      for (int j : part.blocks[b])
        if (!row.coeffs[j].is_zero()) {
          touched.push_back(b);
          break;
        }
    for (size_t a = 0; a < touched.size(); ++a)
      for (size_t b = a + 1; b < touched.size(); ++b)
        g.adj[touched[a]][touched[b]] = g.adj[touched[b]][touched[a]] = true;
  }
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      if (g.adj[i][j]) g.edges.emplace_back(i, j);
  return g;
}

Rational fractional_chromatic(const InteractionGraph& g, const Caps& caps) {
  const int q = g.q;
  if (q < 1) throw domain_error("fractional_chromatic: empty graph");
  if (q > caps.chromatic_nodes)
    throw cap_error("fractional_chromatic: " + std::to_string(q) + " nodes exceed cap " +
                    std::to_string(caps.chromatic_nodes));

  auto stable = [&](unsigned mask) {
    for (int i = 0; i < q; ++i)
      if (mask & (1u << i))
        for (int j = i + 1; j < q; ++j)
          if ((mask & (1u << j)) && g.adj[i][j]) return false;
    return true;
  };

  std::vector<unsigned> maximal;
  for (unsigned mask = 1; mask < (1u << q); ++mask) {
    if (!stable(mask)) continue;
    bool is_max = true;
    for (int v = 0; v < q && is_max; ++v)
      if (!(mask & (1u << v)) && stable(mask | (1u << v))) is_max = false;
    if (is_max) maximal.push_back(mask);
  }

  // min sum y_S subject to: each node covered by total weight >= 1, y >= 0.
  HPolytope cover;
  cover.dim = static_cast<int>(maximal.size());
  for (int v = 0; v < q; ++v) {
    LinearRow row{QVec(cover.dim), Sense::ge, Rational(1)};
    for (int s = 0; s < cover.dim; ++s)
      if (maximal[s] & (1u << v)) row.coeffs[s] = Rational(1);
    cover.rows.push_back(std::move(row));
  }
  LpResult r = solve_lp(cover, true, QVec(cover.dim, Rational(1)), Opt::min);
  if (r.status != LpStatus::optimal)
    throw Error(Error::Code::internal, "fractional_chromatic: cover LP not optimal");
  return r.value;
}

SupportList singleton_supports(int q) {
  SupportList out;
  out.reserve(q);
  for (int v = 0; v < q; ++v) out.push_back({v});
  return out;
}

BlockSparseResult block_sparse_closure_value(const MilpInstance& inst, const Partition& part,
                                             const SupportList& supports, const QVec& c,
                                             const Caps& caps) {
  require_nonneg(c, inst.n, "block_sparse_closure_value");
  BlockClosure bc = build_block_closure(inst, part, supports, caps);
  return {closure_max(bc.closure, c), hull_max(bc.hull, c)};
}

EtaReport verify_eta_bound(const MilpInstance& inst, const Partition& part,
                           const SupportList& supports, const Rational& eta,
                           const std::vector<QVec>& objectives, const Caps& caps) {
  BlockClosure bc = build_block_closure(inst, part, supports, caps);
  EtaReport rep;
  rep.eta = eta;
  for (const auto& c : objectives) {
    require_nonneg(c, inst.n, "verify_eta_bound");
    EtaEntry e;
    e.c = c;
    e.z_sparse = closure_max(bc.closure, c);
    e.z_I = hull_max(bc.hull, c);
    e.ok = e.z_sparse <= eta * e.z_I;
    rep.all_ok = rep.all_ok && e.ok;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

TwinPointReport twin_point_certificate(const MilpInstance& inst, const Partition& part,
                                       const Caps& caps) {
  require_nonneg(inst.objective, inst.n, "twin_point_certificate");
  const int q = static_cast<int>(part.blocks.size());
  BlockClosure bc = build_block_closure(inst, part, singleton_supports(q), caps);

  TwinPointReport rep;
  rep.x_first.assign(inst.n, Rational(0));
  rep.x_rest.assign(inst.n, Rational(0));
  rep.sum_value = Rational(0);
  for (int b = 0; b < q; ++b) {
    // v~_b = max of the block-b objective over the hull; its argmax supplies
    // the block's coordinates of the assembled point.
    QVec cb(inst.n);
    for (int j : part.blocks[b]) cb[j] = inst.objective[j];
    size_t arg = 0;
    Rational best = dot(cb, bc.hull.points.front());
    for (size_t i = 1; i < bc.hull.points.size(); ++i) {
      Rational val = dot(cb, bc.hull.points[i]);
      if (val > best) {
        best = val;
        arg = i;
      }
    }
    rep.sum_value += best;
    QVec& target = (b == 0) ? rep.x_first : rep.x_rest;
    for (int j : part.blocks[b]) target[j] = bc.hull.points[arg][j];
  }

  rep.feasible_first = feasible_point(inst, rep.x_first);
  rep.feasible_rest = feasible_point(inst, rep.x_rest);
  rep.z_sparse = closure_max(bc.closure, inst.objective);
  rep.z_I = hull_max(bc.hull, inst.objective);
  rep.chain_ok = rep.z_sparse <= rep.sum_value && rep.sum_value <= Rational(2) * rep.z_I;
  return rep;
}

}  // namespace cutlab
