#include "cutlab/aggregation.hpp"

#include "cutlab/error.hpp"
#include "cutlab/polytope.hpp"
#include "cutlab/rng.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cutlab {
namespace {

// Canonical positive-scaling key of a cut (sense + integerized row), for
// deduping equivalent cuts from different multipliers.
std::string cut_key(const Cut& c) {
  mpz_class l = 1;
  auto lcm_den = [&l](const Rational& q) {
    mpz_class t;
    mpz_lcm(t.get_mpz_t(), l.get_mpz_t(), q.den().get_mpz_t());
    l = t;
  };
  for (const auto& v : c.coeffs) lcm_den(v);
  lcm_den(c.rhs);
  std::vector<mpz_class> z;
  z.reserve(c.coeffs.size() + 1);
  mpz_class g = 0;
  auto push = [&](const Rational& q) {
    mpz_class v = q.num() * (l / q.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    z.push_back(v);
  };
  for (const auto& v : c.coeffs) push(v);
  push(c.rhs);
  if (g == 0) g = 1;
  std::string key = sense_str(c.sense);
  for (const auto& v : z) {
    key += ',';
    key += mpz_class(v / g).get_str();
  }
  return key;
}

bool all_integer_lb0(const std::vector<Variable>& vars) {
  for (const auto& v : vars)
    if (v.kind != VarKind::integer || !v.lb.is_zero()) return false;
  return true;
}

Cut infeasible_marker(int n) {
  Cut c;
  c.coeffs.assign(n, Rational(0));
  c.sense = Sense::le;
  c.rhs = Rational(-1);
  c.provenance.generator = "knapsack-hull";
  c.provenance.note = "empty single-row set";
  return c;
}

// Drop facets that only restate the ambient variable bounds.
bool keep_row(const LinearRow& r, const std::vector<Variable>& vars) {
  std::vector<int> sup;
  for (size_t j = 0; j < r.coeffs.size(); ++j)
    if (!r.coeffs[j].is_zero()) sup.push_back(static_cast<int>(j));
  if (sup.empty()) return r.sense == Sense::le ? r.rhs.sign() < 0 : r.rhs.sign() > 0;
  if (sup.size() == 1) {
    const int j = sup[0];
    const Rational bound = r.rhs / r.coeffs[j];
    const bool upper = (r.sense == Sense::le) == (r.coeffs[j].sign() > 0);
    if (upper) return !vars[j].ub || bound < *vars[j].ub;
    return bound > vars[j].lb;
  }
  return true;
}

// Facet rows to cuts: equality rows of lower-dimensional hulls expand into a
// le/ge pair; all-nonpositive normals are flipped for readability; bound
// restatements are dropped.
void push_facet_rows(const HPolytope& facets, const std::vector<Variable>& vars,
                     const std::string& note, std::vector<Cut>& out) {
  auto push = [&](QVec coeffs, Sense s, Rational rhs) {
    LinearRow r{std::move(coeffs), s, std::move(rhs)};
    bool all_np = true, any_neg = false;
    for (const auto& c : r.coeffs) {
      if (c.sign() > 0) all_np = false;
      if (c.sign() < 0) any_neg = true;
    }
    if (all_np && any_neg) {
      for (auto& c : r.coeffs) c = -c;
      r.rhs = -r.rhs;
      r.sense = r.sense == Sense::le ? Sense::ge : Sense::le;
    }
    if (!keep_row(r, vars)) return;
    Cut cut;
    cut.coeffs = std::move(r.coeffs);
    cut.sense = r.sense;
    cut.rhs = std::move(r.rhs);
    cut.provenance.generator = "knapsack-hull";
    cut.provenance.note = note;
    out.push_back(std::move(cut));
  };
  for (const auto& f : facets.rows) {
    if (f.sense == Sense::eq) {
      push(f.coeffs, Sense::le, f.rhs);
      push(f.coeffs, Sense::ge, f.rhs);
    } else {
      push(f.coeffs, f.sense, f.rhs);
    }
  }
}

long bound_to_long(const Rational& b, const char* who) {
  mpz_class v = b.num();  // integral by construction (floor/ceil)
  if (!v.fits_slong_p()) throw cap_error(std::string(who) + ": implied bound too large");
  return v.get_si();
}

void check_cells(const std::vector<long>& box, const Caps& caps, const char* who) {
  mpz_class cells = 1;
  for (long c : box) cells *= mpz_class(c) + 1;
  if (cells > caps.hull_box_cells)
    throw cap_error(std::string(who) + ": enumeration box of " + cells.get_str() +
                    " cells exceeds cap " + std::to_string(caps.hull_box_cells));
}

// Integer points with x_{sup[i]} in [0, box[i]], zero elsewhere, keeping
// those whose row value a.x satisfies pred.
template <typename Pred>
std::vector<QVec> box_points(int n, const std::vector<int>& sup, const std::vector<long>& box,
                             const QVec& a, Pred pred) {
  std::vector<QVec> pts;
  std::vector<long> cur(sup.size(), 0);
  for (;;) {
    Rational val(0);
    for (size_t i = 0; i < sup.size(); ++i) val += a[sup[i]] * Rational(cur[i]);
    if (pred(val)) {
      QVec x(n, Rational(0));
      for (size_t i = 0; i < sup.size(); ++i) x[sup[i]] = Rational(cur[i]);
      pts.push_back(std::move(x));
    }
    size_t i = 0;
    while (i < sup.size() && cur[i] == box[i]) {
      cur[i] = 0;
      ++i;
    }
    if (i == sup.size()) break;
    ++cur[i];
  }
  return pts;
}

Rational hull_max(const VPolytope& hull, const QVec& c) {
  Rational best = dot(c, hull.points.front());
  for (size_t i = 1; i < hull.points.size(); ++i) best = max(best, dot(c, hull.points[i]));
  return best;
}

void require_nonneg(const QVec& c, int n, const char* who) {
  if (static_cast<int>(c.size()) != n)
    throw domain_error(std::string(who) + ": objective arity mismatch");
  for (const auto& v : c)
    if (v.sign() < 0) throw domain_error(std::string(who) + ": objective must be nonnegative");
}

Rational polytope_max(const HPolytope& h, const QVec& c, const char* who) {
  LpResult r = solve_lp(h, true, c, Opt::max);
  if (r.status == LpStatus::infeasible)
    throw Error(Error::Code::infeasible, std::string(who) + ": empty set");
  if (r.status == LpStatus::unbounded)
    throw Error(Error::Code::unbounded, std::string(who) + ": unbounded objective");
  return r.value;
}

bool has_tag(const MilpInstance& inst, const std::string& tag) {
  auto tags = classify(inst);
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

}  // namespace

std::vector<Cut> knapsack_hull_cuts(const LinearRow& row, const std::vector<Variable>& vars,
                                    const Caps& caps) {
  const int n = static_cast<int>(row.coeffs.size());
  if (n == 0 || static_cast<int>(vars.size()) != n)
    throw domain_error("knapsack_hull_cuts: arity mismatch");

  bool coeffs_nonneg = true;
  for (const auto& a : row.coeffs)
    if (a.sign() < 0) coeffs_nonneg = false;
  std::vector<Cut> out;

  if (all_integer_lb0(vars) && coeffs_nonneg && row.sense == Sense::le) {
    // {x in Z^n_+ : a.x <= b}, a >= 0: hull of the points in the implied box
    // floor(b/a_j), with zero-coefficient coordinates as recession rays.
    if (row.rhs.sign() < 0) return {infeasible_marker(n)};
    std::vector<int> sup;
    for (int j = 0; j < n; ++j)
      if (row.coeffs[j].sign() > 0) sup.push_back(j);
    if (sup.empty()) return {};  // 0 <= b, vacuous
    std::vector<long> box;
    for (int j : sup) box.push_back(bound_to_long(floor(row.rhs / row.coeffs[j]), "knapsack_hull_cuts"));
    check_cells(box, caps, "knapsack_hull_cuts");
    std::vector<QVec> pts =
        box_points(n, sup, box, row.coeffs, [&](const Rational& v) { return v <= row.rhs; });
    // Hull vertices generate the same cone; feeding raw box points would trip
    // the facet enumerator's generator cap on any non-trivial knapsack.
    pts = canonicalize({n, std::move(pts)}).points;
    std::vector<QVec> rays;
    for (int j = 0; j < n; ++j)
      if (row.coeffs[j].is_zero()) {
        QVec e(n, Rational(0));
        e[j] = Rational(1);
        rays.push_back(std::move(e));
      }
    push_facet_rows(convex_hull_facets(pts, rays, n), vars, "nonneg le row: implied box", out);
    return out;
  }

  if (all_integer_lb0(vars) && coeffs_nonneg && row.sense == Sense::ge) {
    // {x in Z^n_+ : a.x >= b}, a >= 0: any point reduces coordinatewise into
    // the box ceil(b/a_j) while staying feasible, and every unit direction is
    // a recession ray, so hull = conv(box points) + cone(e_1..e_n).
    if (row.rhs.sign() <= 0) return {};  // whole orthant qualifies
    std::vector<int> sup;
    for (int j = 0; j < n; ++j)
      if (row.coeffs[j].sign() > 0) sup.push_back(j);
    if (sup.empty()) return {infeasible_marker(n)};  // 0 >= b > 0
    std::vector<long> box;
    for (int j : sup) box.push_back(bound_to_long(ceil(row.rhs / row.coeffs[j]), "knapsack_hull_cuts"));
    check_cells(box, caps, "knapsack_hull_cuts");
    std::vector<QVec> pts =
        box_points(n, sup, box, row.coeffs, [&](const Rational& v) { return v >= row.rhs; });
    pts = canonicalize({n, std::move(pts)}).points;
    std::vector<QVec> rays;
    for (int j = 0; j < n; ++j) {
      QVec e(n, Rational(0));
      e[j] = Rational(1);
      rays.push_back(std::move(e));
    }
    push_facet_rows(convex_hull_facets(pts, rays, n), vars, "nonneg ge row: box and unit rays", out);
    return out;
  }

  // General row (mixed signs or kinds, eq sense, lb > 0): the bounded
  // single-row instance's integer hull. Variable bounds are part of the
  // studied set here, so every variable must carry a finite ub.
  for (const auto& v : vars)
    if (!v.ub) throw domain_error("knapsack_hull_cuts: general row needs finite variable bounds");
  MilpInstance one;
  one.name = "single-row";
  one.n = n;
  one.vars = vars;
  one.rows = {row};
  one.objective.assign(n, Rational(0));
  VPolytope hull = integer_hull(one, caps);
  if (hull.points.empty()) return {infeasible_marker(n)};
  push_facet_rows(convex_hull_facets(hull.points, {}, n), vars, "bounded single-row hull", out);
  return out;
}

HPolytope ClosureApprox::as_hpolytope() const {
  HPolytope h = base;
  for (const auto& c : cuts) h.rows.push_back(c.as_row());
  return h;
}

ClosureApprox aggregation_closure_outer(const MilpInstance& inst, const AggSampler& sampler,
                                        int budget, std::uint64_t seed, const Caps& caps) {
  inst.validate();
  const int m = static_cast<int>(inst.rows.size());
  if (m == 0) throw domain_error("aggregation_closure_outer: instance has no rows");
  if (!sampler.include_units && sampler.extra.empty() && budget <= 0)
    throw domain_error("aggregation_closure_outer: no units, no extras and budget 0");
  const Sense orientation =
      has_tag(inst, "covering") && !has_tag(inst, "packing") ? Sense::ge : Sense::le;

  std::vector<QVec> lambdas;
  if (sampler.include_units)
    for (int i = 0; i < m; ++i) {
      QVec e(m, Rational(0));
      e[i] = Rational(1);
      lambdas.push_back(std::move(e));
    }
  for (const auto& lam : sampler.extra) {
    if (static_cast<int>(lam.size()) != m)
      throw domain_error("aggregation_closure_outer: extra multiplier arity mismatch");
    lambdas.push_back(lam);
  }
  Rng rng(seed);
  for (int d = 0; d < budget; ++d) {
    const int s =
        static_cast<int>(rng.range(1, std::min(static_cast<long>(sampler.max_support), static_cast<long>(m))));
    std::set<int> idx;
    while (static_cast<int>(idx.size()) < s)
      idx.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(m))));
    QVec lam(m, Rational(0));
    for (int i : idx) lam[i] = Rational(rng.range(1, sampler.max_entry));
    lambdas.push_back(std::move(lam));
  }

  ClosureApprox ca;
  ca.base = lp_relaxation(inst);
  ca.exact = false;
  std::set<std::string> seen;
  for (const auto& lam : lambdas) {
    Cut agg = aggregate(inst, lam, orientation);
    if (support_size(agg.coeffs) == 0) continue;  // cancelled to 0 <= b: vacuous
    std::vector<Cut> kcuts;
    try {
      kcuts = knapsack_hull_cuts(agg.as_row(), inst.vars, caps);
    } catch (const Error& e) {
      if (e.code == Error::Code::cap) {
        // dropping one piece of an intersection keeps the set outer
        ++ca.skipped;
        continue;
      }
      throw;
    }
    ca.multipliers.push_back(lam);
    for (auto& kc : kcuts) {
      kc.provenance.generator = "aggregation";
      kc.provenance.multipliers = lam;
      if (seen.insert(cut_key(kc)).second) ca.cuts.push_back(std::move(kc));
    }
  }
  return ca;
}

ClosureApprox one_row_closure(const MilpInstance& inst, const Caps& caps) {
  inst.validate();
  const int m = static_cast<int>(inst.rows.size());
  ClosureApprox ca;
  ca.base = lp_relaxation(inst);
  ca.exact = true;
  std::set<std::string> seen;
  for (int i = 0; i < m; ++i) {
    std::vector<Cut> kcuts = knapsack_hull_cuts(inst.rows[i], inst.vars, caps);
    QVec lam(m, Rational(0));
    lam[i] = Rational(1);
    ca.multipliers.push_back(lam);
    for (auto& kc : kcuts) {
      kc.provenance.generator = "one-row";
      kc.provenance.multipliers = lam;
      kc.provenance.source_rows = {i};
      if (seen.insert(cut_key(kc)).second) ca.cuts.push_back(std::move(kc));
    }
  }
  return ca;
}

Rational closure_value(const ClosureApprox& ca, const QVec& c, Opt sense) {
  LpResult r = solve_lp(ca.as_hpolytope(), true, c, sense);
  if (r.status == LpStatus::infeasible)
    throw Error(Error::Code::infeasible, "closure_value: empty closure");
  if (r.status == LpStatus::unbounded)
    throw Error(Error::Code::unbounded, "closure_value: unbounded objective");
  return r.value;
}

AlphaResult alpha_ratio(const HPolytope& U, const HPolytope& V, int budget, std::uint64_t seed,
                        Opt sense, const Caps& caps) {
  if (U.dim != V.dim) throw domain_error("alpha_ratio: dimension mismatch");
  const int n = U.dim;

  // Containment U >= V, asserted on V's vertices (ambient x >= 0 made
  // explicit for the enumeration).
  HPolytope vnn = V;
  for (int j = 0; j < n; ++j) {
    LinearRow r{QVec(n, Rational(0)), Sense::ge, Rational(0)};
    r.coeffs[j] = Rational(1);
    vnn.rows.push_back(std::move(r));
  }
  VPolytope vverts = enumerate_vertices(vnn, caps);
  for (const auto& p : vverts.points)
    for (const auto& r : U.rows)
      if (!r.satisfied_by(p)) throw domain_error("alpha_ratio: U does not contain V");

  std::vector<QVec> objectives;
  for (int j = 0; j < n; ++j) {
    QVec e(n, Rational(0));
    e[j] = Rational(1);
    objectives.push_back(std::move(e));
  }
  objectives.emplace_back(n, Rational(1));
  Rng rng(seed);
  for (int d = 0; d < budget; ++d) {
    QVec c(n);
    for (int j = 0; j < n; ++j) c[j] = Rational(rng.range(0, 9));
    objectives.push_back(std::move(c));
  }

  AlphaResult res;
  res.ratio = Rational(1);
  res.worst_c.assign(n, Rational(1));
  for (const auto& c : objectives) {
    auto val = [&](const HPolytope& h) {
      LpResult r = solve_lp(h, true, c, sense);
      if (r.status != LpStatus::optimal)
        throw Error(r.status == LpStatus::unbounded ? Error::Code::unbounded : Error::Code::infeasible,
                    "alpha_ratio: value LP not optimal");
      return r.value;
    };
    const Rational vu = val(U), vv = val(V);
    const Rational& num = sense == Opt::max ? vu : vv;
    const Rational& den = sense == Opt::max ? vv : vu;
    if (num.is_zero() && den.is_zero()) continue;  // ratio 1, never below the floor
    if (den.is_zero()) {
      res.unbounded = true;
      res.worst_c = c;
      continue;
    }
    const Rational r = num / den;
    if (r > res.ratio) {
      res.ratio = r;
      res.worst_c = c;
    }
  }
  return res;
}

ThmAggReport verify_thm_agg(const MilpInstance& inst, const std::vector<QVec>& objectives,
                            int budget, std::uint64_t seed, const Caps& caps) {
  inst.validate();
  if (!has_tag(inst, "packing")) throw domain_error("verify_thm_agg: instance is not packing");
  if (!inst.all_bounded()) throw domain_error("verify_thm_agg: unbounded variables");
  for (const auto& row : inst.rows)
    for (const auto& a : row.coeffs)
      if (a > row.rhs)
        throw domain_error("verify_thm_agg: instance not pre-processed (some A_ij > b_i)");

  ClosureApprox ca = aggregation_closure_outer(inst, AggSampler{}, budget, seed, caps);
  const HPolytope agg = ca.as_hpolytope();
  VPolytope hull = integer_hull(inst, caps);
  if (hull.points.empty())
    throw Error(Error::Code::internal, "verify_thm_agg: packing hull lost the origin");

  ThmAggReport rep;
  rep.skipped = ca.skipped;
  for (const auto& c : objectives) {
    require_nonneg(c, inst.n, "verify_thm_agg");
    ThmAggEntry e;
    e.c = c;
    e.z_lp = polytope_max(ca.base, c, "verify_thm_agg");
    e.z_agg_outer = polytope_max(agg, c, "verify_thm_agg");
    e.z_I = hull_max(hull, c);
    e.surrogate_ok = e.z_lp <= Rational(2) * e.z_I;
    e.implied_ok = e.z_lp <= Rational(2) * e.z_agg_outer;
    e.sandwich_ok = e.z_lp >= e.z_agg_outer && e.z_agg_outer >= e.z_I;
    rep.all_ok = rep.all_ok && e.surrogate_ok && e.implied_ok && e.sandwich_ok;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

SignPatternReport sign_pattern_experiment(const MilpInstance& inst,
                                          const std::vector<QVec>& objectives, int budget,
                                          std::uint64_t seed, const Caps& caps) {
  inst.validate();
  if (!has_tag(inst, "sign-pattern"))
    throw domain_error("sign_pattern_experiment: instance is not sign-pattern");

  ClosureApprox one = one_row_closure(inst, caps);
  ClosureApprox agg = aggregation_closure_outer(inst, AggSampler{}, budget, seed, caps);
  SignPatternReport rep;
  rep.skipped = agg.skipped;
  for (const auto& c : objectives) {
    require_nonneg(c, inst.n, "sign_pattern_experiment");
    SignPatternEntry e;
    e.c = c;
    e.z_1row = closure_value(one, c);
    e.z_agg_outer = closure_value(agg, c);
    e.ok = e.z_1row <= Rational(2) * e.z_agg_outer;
    rep.all_ok = rep.all_ok && e.ok;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

CgCompareReport cg_1row_vs_aggregated(const MilpInstance& inst, int budget, std::uint64_t seed,
                                      const Caps& caps) {
  inst.validate();
  if (!inst.pure_integer()) throw domain_error("cg_1row_vs_aggregated: pure-integer instances only");
  if (!inst.all_bounded()) throw domain_error("cg_1row_vs_aggregated: unbounded variables");

  CgCompareReport rep;
  const HPolytope lp = lp_relaxation(inst);
  rep.z_lp = polytope_max(lp, inst.objective, "cg_1row_vs_aggregated");
  VPolytope hull = integer_hull(inst, caps);
  if (hull.points.empty())
    throw Error(Error::Code::infeasible, "cg_1row_vs_aggregated: no integer-feasible points");
  rep.z_I = hull_max(hull, inst.objective);
  if (rep.z_lp == rep.z_I) {
    rep.already_integral = true;
    rep.z_cut_1row = rep.z_cut_agg = rep.z_lp;
    rep.gap_1row = rep.gap_agg = Rational(0);
    return rep;
  }

  // Small-denominator CG multipliers p/q, q <= 5, p <= 2q, in lowest terms.
  std::vector<Rational> mults;
  for (long q = 1; q <= 5; ++q)
    for (long p = 1; p <= 2 * q; ++p)
      if (std::gcd(p, q) == 1) mults.emplace_back(p, q);

  std::set<std::string> seen;
  auto add_cg = [&](const LinearRow& r, std::vector<Cut>& out, int source_row, const QVec* lam) {
    if (support_size(r.coeffs) == 0) return;
    Cut cg = cg_cut(r, inst.vars);
    if (source_row >= 0) cg.provenance.source_rows = {source_row};
    if (lam) cg.provenance.multipliers = *lam;
    if (seen.insert(cut_key(cg)).second) out.push_back(std::move(cg));
  };

  std::vector<Cut> cuts1;
  for (size_t i = 0; i < inst.rows.size(); ++i) {
    const LinearRow& row = inst.rows[i];
    for (const Rational& mu : mults) {
      QVec sc = scale(row.coeffs, mu);
      if (row.sense != Sense::ge) add_cg({sc, Sense::le, row.rhs * mu}, cuts1, static_cast<int>(i), nullptr);
      if (row.sense != Sense::le) add_cg({sc, Sense::ge, row.rhs * mu}, cuts1, static_cast<int>(i), nullptr);
    }
  }

  auto value_with = [&](const std::vector<Cut>& cuts) {
    HPolytope h = lp;
    for (const auto& c : cuts) h.rows.push_back(c.as_row());
    return polytope_max(h, inst.objective, "cg_1row_vs_aggregated");
  };
  rep.z_cut_1row = value_with(cuts1);
  rep.cuts_1row = static_cast<int>(cuts1.size());

  // Aggregated family: the 1-row cuts, then a deterministic ladder of proper
  // mod-q multiplier pairs (q ascending, all row pairs, sign flips on
  // equality rows only) — single-row multiples of an equality row shifted by
  // integers collapse onto the 1-row family, so the pairs are where new cuts
  // live — and random draws (up to 3 rows, multipliers p/q <= 2, q <= 5) for
  // whatever budget remains.
  std::vector<Cut> cuts_agg = cuts1;
  const int m = static_cast<int>(inst.rows.size());
  int left = budget;
  for (long q = 2; q <= 5 && left > 0; ++q)
    for (int i = 0; i < m && left > 0; ++i)
      for (int j = i + 1; j < m && left > 0; ++j)
        for (long p1 = 1; p1 < q && left > 0; ++p1)
          for (long p2 = 1; p2 < q && left > 0; ++p2) {
            if (std::gcd(std::gcd(p1, p2), q) != 1) continue;  // same cut at a smaller q
            for (int sgn = 0; sgn < 4 && left > 0; ++sgn) {
              if ((sgn & 1) && inst.rows[i].sense != Sense::eq) continue;
              if ((sgn & 2) && inst.rows[j].sense != Sense::eq) continue;
              QVec lam(m, Rational(0));
              lam[i] = (sgn & 1) ? Rational(-p1, q) : Rational(p1, q);
              lam[j] = (sgn & 2) ? Rational(-p2, q) : Rational(p2, q);
              --left;
              Cut agg = aggregate(inst, lam, Sense::le, /*equality_any_sign=*/true);
              add_cg(agg.as_row(), cuts_agg, -1, &lam);
            }
          }
  Rng rng(seed);
  for (int d = 0; d < left; ++d) {
    const int s = static_cast<int>(rng.range(1, std::min(3L, static_cast<long>(m))));
    std::set<int> idx;
    while (static_cast<int>(idx.size()) < s)
      idx.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(m))));
    QVec lam(m, Rational(0));
    for (int i : idx) {
      const long q = rng.range(1, 5);
      const long p = rng.range(1, 2 * q);
      Rational v(p, q);
      if (inst.rows[i].sense == Sense::eq && rng.coin()) v = -v;
      lam[i] = v;
    }
    Cut agg = aggregate(inst, lam, Sense::le, /*equality_any_sign=*/true);
    add_cg(agg.as_row(), cuts_agg, -1, &lam);
  }
  rep.z_cut_agg = value_with(cuts_agg);
  rep.cuts_agg = static_cast<int>(cuts_agg.size());

  const Rational span = rep.z_lp - rep.z_I;
  rep.gap_1row = (rep.z_lp - rep.z_cut_1row) / span;
  rep.gap_agg = (rep.z_lp - rep.z_cut_agg) / span;
  return rep;
}

MilpInstance family_1row_vs_agg(long M) {
  if (M < 2 || M > 1000000) throw domain_error("family_1row_vs_agg: M must be in [2, 10^6]");
  MilpInstance f;
  f.name = "cancel-family-" + std::to_string(M);
  f.n = 2;
  Variable x;
  x.kind = VarKind::integer;
  x.lb = Rational(0);
  x.ub = Rational(M + 1);
  Variable y;
  y.kind = VarKind::continuous;
  y.lb = Rational(0);
  y.ub = Rational(2 * M + 1);
  f.vars = {x, y};
  f.rows.push_back({{Rational(1), Rational(1)}, Sense::le, Rational(2 * M + 1, 2)});
  f.rows.push_back({{Rational(1), Rational(-1)}, Sense::le, Rational(1 - 2 * M, 2)});
  f.objective = {Rational(1), Rational(1, M * M)};
  f.tags = {"cancel-family"};
  f.validate();
  return f;
}

}  // namespace cutlab
