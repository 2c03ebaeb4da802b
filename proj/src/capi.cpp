#include "cutlab/cutlab.h"

#include "cutlab/acceptance.hpp"
#include "cutlab/aggregation.hpp"
#include "cutlab/blocks.hpp"
#include "cutlab/caps.hpp"
#include "cutlab/cuts.hpp"
#include "cutlab/error.hpp"
#include "cutlab/experiments.hpp"
#include "cutlab/generators.hpp"
#include "cutlab/gomory.hpp"
#include "cutlab/instance.hpp"
#include "cutlab/instance_io.hpp"
#include "cutlab/interval.hpp"
#include "cutlab/polytope.hpp"
#include "cutlab/rng.hpp"
#include "cutlab/selection.hpp"
#include "cutlab/simplex.hpp"
#include "cutlab/sparsifier.hpp"
#include "cutlab/sparsity.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace cutlab;

struct cutlab_instance {
  MilpInstance inst;
};

namespace {

thread_local std::string t_err;

char* dup0(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

const char* code_name(Error::Code c) {
  switch (c) {
    case Error::Code::domain: return "domain";
    case Error::Code::cap: return "cap";
    case Error::Code::unbounded: return "unbounded";
    case Error::Code::infeasible: return "infeasible";
    case Error::Code::parse: return "parse";
    case Error::Code::internal: return "internal";
  }
  return "internal";
}

// Defaults, then the CUTLAB_CAPS environment override, then the command's own
// "caps" object — later layers win key by key.
Caps caps_from(const json& j) {
  Caps caps;
  if (const char* env = std::getenv("CUTLAB_CAPS"); env && *env) caps.apply_json(env);
  if (j.contains("caps")) caps.apply_json(j.at("caps").dump());
  return caps;
}

Rational rat_from(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw parse_error("expected an integer or a rational string, got " + v.dump());
}

QVec qvec_from(const json& a) {
  if (!a.is_array()) throw parse_error("expected an array of rationals, got " + a.dump());
  QVec v;
  v.reserve(a.size());
  for (const auto& e : a) v.push_back(rat_from(e));
  return v;
}

json qvec_json(const QVec& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(q.str());
  return a;
}

std::uint64_t seed_from(const json& j) { return j.value("seed", std::uint64_t{0}); }

MilpInstance inst_from(const json& j) {
  if (j.contains("instance")) return instance_from_json(j.at("instance").dump());
  if (j.contains("gen")) {
    const json& g = j.at("gen");
    std::map<std::string, long> params;
    if (g.contains("params"))
      for (const auto& [k, v] : g.at("params").items()) params[k] = v.get<long>();
    return generate(g.at("kind").get<std::string>(), params, g.value("seed", std::uint64_t{0}));
  }
  throw parse_error("command needs an \"instance\" document or a \"gen\" request");
}

VPolytope poly_from(const json& j) {
  if (j.value("fixture", false))  // the unit-simplex edge conv{(0,1),(1,0)}
    return {2, {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}};
  const json& p = j.at("polytope");
  VPolytope P;
  P.dim = p.at("dim").get<int>();
  for (const auto& pt : p.at("points")) P.points.push_back(qvec_from(pt));
  return P;
}

// Accepts "0,1;2,3" (blocks separated by ';', ids by ',') or a JSON array of
// arrays; falls back to the instance's embedded partition tag.
Partition partition_from(const json& j, const MilpInstance& inst) {
  Partition part;
  if (j.contains("blocks")) {
    const json& b = j.at("blocks");
    if (b.is_string()) {
      std::vector<int> cur;
      std::string tok;
      auto flush_id = [&] {
        if (tok.empty()) throw parse_error("blocks: empty variable id");
        cur.push_back(std::stoi(tok));
        tok.clear();
      };
      for (char ch : b.get<std::string>()) {
        if (ch == ',') flush_id();
        else if (ch == ';') {
          flush_id();
          part.blocks.push_back(std::move(cur));
          cur.clear();
        } else if (ch >= '0' && ch <= '9') tok += ch;
        else if (ch != ' ') throw parse_error(std::string("blocks: unexpected character '") + ch + "'");
      }
      flush_id();
      part.blocks.push_back(std::move(cur));
    } else if (b.is_array()) {
      for (const auto& blk : b) {
        std::vector<int> ids;
        for (const auto& e : blk) ids.push_back(e.get<int>());
        part.blocks.push_back(std::move(ids));
      }
    } else {
      throw parse_error("blocks: expected a string or an array of arrays");
    }
    part.validate(inst.n);
    return part;
  }
  if (has_partition_tag(inst)) return partition_from_tag(inst);
  throw parse_error("no partition: pass \"blocks\" or use an instance with a partition tag");
}

json interval_json(const Interval& iv) {
  return {{"lo", iv.lo.str()}, {"hi", iv.hi.str()}, {"approx", iv.mid_approx()}};
}

json cuts_json(const std::vector<Cut>& cuts) { return json::parse(cuts_to_json(cuts)); }

json cmd_gen(const json& j) {
  std::map<std::string, long> params;
  if (j.contains("params"))
    for (const auto& [k, v] : j.at("params").items()) params[k] = v.get<long>();
  MilpInstance inst = generate(j.at("kind").get<std::string>(), params, seed_from(j));
  return {{"instance", json::parse(instance_to_json(inst))}};
}

json cmd_classify(const json& j) {
  MilpInstance inst = inst_from(j);
  return {{"name", inst.name}, {"tags", classify(inst)}};
}

// Every generator that applies to the instance, row by row: single-row hull
// facets, CG and MIR cuts on inequality rows, corner cuts from the optimal
// tableau, and a subadditive cut on all-ge pure-integer instances. Generators
// that reject a row (preconditions, caps) are skipped and counted.
json cmd_cuts(const json& j, int& code) {
  MilpInstance inst = inst_from(j);
  Caps caps = caps_from(j);
  bool validate = j.value("validate", true);
  std::vector<Cut> cuts;
  int skipped = 0;
  for (std::size_t r = 0; r < inst.rows.size(); ++r) {
    const LinearRow& row = inst.rows[r];
    try {
      for (Cut c : knapsack_hull_cuts(row, inst.vars, caps)) {
        c.provenance.source_rows = {static_cast<int>(r)};
        cuts.push_back(std::move(c));
      }
    } catch (const Error&) {
      ++skipped;
    }
    if (row.sense == Sense::eq) continue;
    bool int_support = true;
    for (std::size_t v = 0; v < row.coeffs.size(); ++v)
      if (!row.coeffs[v].is_zero() && inst.vars[v].kind != VarKind::integer) int_support = false;
    if (int_support) {
      try {
        Cut c = cg_cut(row, inst.vars);
        c.provenance.source_rows = {static_cast<int>(r)};
        cuts.push_back(std::move(c));
      } catch (const Error&) {
        ++skipped;
      }
    }
    try {
      MirEmbedding emb = row.sense == Sense::ge ? mir_embed_ge_row(row, inst.vars)
                                                : mir_embed_le_complement(row, inst.vars);
      Cut c = mir_cut(emb, inst.vars);
      c.provenance.source_rows = {static_cast<int>(r)};
      cuts.push_back(std::move(c));
    } catch (const Error&) {
      ++skipped;
    }
  }
  try {
    HPolytope relax = lp_relaxation(inst);
    LpResult lp = solve_lp(relax, true, inst.objective, Opt::max);
    if (lp.status == LpStatus::optimal) {
      for (std::size_t r = 0; r < lp.tableau.rows.size(); ++r) {
        const auto& col = lp.tableau.cols[static_cast<std::size_t>(lp.tableau.rows[r].basic_col)];
        if (col.kind != TableauCol::structural) continue;
        if (inst.vars[static_cast<std::size_t>(col.index)].kind != VarKind::integer) continue;
        if (lp.x[static_cast<std::size_t>(col.index)].is_integer()) continue;
        try {
          cuts.push_back(gmic(inst, relax, lp.tableau, static_cast<int>(r)).cut);
        } catch (const Error&) {
          ++skipped;
        }
      }
    }
  } catch (const Error&) {
    ++skipped;
  }
  bool all_ge = true;
  for (const auto& row : inst.rows)
    if (row.sense != Sense::ge) all_ge = false;
  if (all_ge && !inst.rows.empty() && inst.pure_integer()) {
    SubadditiveFn f;
    f.m = static_cast<int>(inst.rows.size());
    f.name = "ceil-half-sum";
    f.eval = [](const QVec& v) {
      Rational s;
      for (const auto& q : v) s = s + q;
      return Rational(ceil(s / Rational(2)));
    };
    try {
      cuts.push_back(subadditive_cut(f, inst, task_seed(seed_from(j), 99)));
    } catch (const Error&) {
      ++skipped;
    }
  }
  int invalid = 0, unchecked = 0;
  if (validate) {
    for (const auto& c : cuts) {
      try {
        if (!cut_valid(inst, c, caps)) ++invalid;
      } catch (const Error&) {
        ++unchecked;  // validity oracle over its caps; the cut is reported unverified
      }
    }
  }
  if (invalid > 0) code = 1;
  return {{"instance", inst.name},   {"count", cuts.size()},       {"cuts", cuts_json(cuts)},
          {"skipped", skipped},      {"invalid", invalid},         {"unchecked", unchecked},
          {"validated", validate}};
}

json cmd_select(const json& j, int& code) {
  (void)code;
  std::optional<MilpInstance> inst;
  if (j.contains("instance") || j.contains("gen")) inst = inst_from(j);
  QVec xstar;
  if (j.contains("xstar")) {
    xstar = qvec_from(j.at("xstar"));
  } else if (inst) {
    LpResult lp = solve_relaxation(*inst, Opt::max);
    if (lp.status != LpStatus::optimal)
      throw domain_error("select: LP relaxation has no optimum; pass \"xstar\" explicitly");
    xstar = lp.x;
  } else {
    throw parse_error("select needs \"xstar\" or an instance to take the LP optimum from");
  }
  CutPool pool;
  pool.xstars.push_back(xstar);
  int rejected = 0;
  for (const auto& e : j.at("cuts")) {
    try {
      pool.add(cut_from_json(e.dump()));
    } catch (const Error&) {
      ++rejected;  // separates no recorded point; not a usable pool member
    }
  }
  Policy p;
  if (j.contains("policy")) p = Policy::from_json(j.at("policy").dump());
  ResolvedPolicy rp = resolve_policy(p, static_cast<int>(xstar.size()));
  QVec obj;
  const QVec* objp = nullptr;
  Rational w_objpar(0);
  if (j.contains("w_objpar")) {
    w_objpar = rat_from(j.at("w_objpar"));
    if (j.contains("objective")) obj = qvec_from(j.at("objective"));
    else if (inst) obj = inst->objective;
    else throw parse_error("w_objpar needs an \"objective\" or an instance");
    objp = &obj;
  }
  auto sel = select(pool, xstar, rp, objp, w_objpar);
  json arr = json::array();
  for (const auto& s : sel)
    arr.push_back({{"cut", json::parse(cut_to_json(s.cut))},
                   {"sq_depth", s.sq_depth_v.str()},
                   {"dynamism", s.dynamism_v.str()},
                   {"sparsity", s.sparsity},
                   {"composite", s.composite.str()},
                   {"max_sq_parallelism_to_selected", s.max_sq_par_to_selected.str()}});
  return {{"xstar", qvec_json(xstar)},
          {"pool_size", pool.cuts.size()},
          {"rejected", rejected},
          {"selected", arr}};
}

json cmd_gomory(const json& j) {
  MilpInstance inst = inst_from(j);
  Caps caps = caps_from(j);
  Opt sense = j.value("sense", std::string("max")) == "min" ? Opt::min : Opt::max;
  GomoryResult r = gomory_loop(inst, sense, caps);
  const char* st = r.status == GomoryResult::Status::optimal     ? "optimal"
                   : r.status == GomoryResult::Status::infeasible ? "infeasible"
                                                                  : "cap_hit";
  json out{{"instance", inst.name},
           {"status", st},
           {"iterations", r.iterations},
           {"cuts", cuts_json(r.cuts)}};
  if (r.status == GomoryResult::Status::optimal) {
    out["optimum"] = r.optimum.str();
    out["solution"] = qvec_json(r.solution);
  }
  return out;
}

json cmd_sparsity(const json& j, int& code) {
  std::string op = j.value("op", std::string("dist"));
  if (op == "bound") {
    Theorem1Bound b =
        theorem1_bound(j.at("n").get<int>(), j.at("k").get<int>(), j.at("t").get<int>());
    return {{"bound", interval_json(b.bound)},
            {"term1", interval_json(b.term1)},
            {"term2", interval_json(b.term2)}};
  }
  if (op == "dist") {
    VPolytope P = poly_from(j);
    int k = j.at("k").get<int>();
    Caps caps = caps_from(j);
    DistPkResult d = dist_pk(P, k, caps);
    int n = static_cast<int>(P.dim);
    int t = static_cast<int>(P.points.size());
    Theorem1Bound b = theorem1_bound(n, k, t);
    bool certified = certified_sq_le(d.sq_dist, b.bound);
    if (!certified) code = 1;
    std::ostringstream cfg;
    cfg << "op=dist n=" << n << " k=" << k << " t=" << t;
    std::ostringstream csv;
    csv << csv_head(cfg.str(), seed_from(j), "instance,n,k,t,sq_dist,bound,bound_term1,bound_term2,pass")
        << "vpoly," << n << ',' << k << ',' << t << ',' << d.sq_dist.str() << ','
        << b.bound.lo.str() << ',' << b.term1.lo.str() << ',' << b.term2.lo.str() << ','
        << (certified ? 1 : 0) << '\n';
    return {{"n", n},
            {"k", k},
            {"t", t},
            {"sq_dist", d.sq_dist.str()},
            {"witness", qvec_json(d.witness)},
            {"bound", interval_json(b.bound)},
            {"pass", certified},
            {"csv", csv.str()}};
  }
  if (op == "sparsify") {
    Caps caps = caps_from(j);
    std::uint64_t seed = seed_from(j);
    SparsifierInput inp;
    if (j.contains("spec_index")) {
      inp = gen_sparsifier_spec(j.at("spec_index").get<int>(), seed);
    } else {
      inp = make_sparsifier_input(poly_from(j), qvec_from(j.at("u")), j.at("k").get<int>(), caps);
    }
    SparsifyResult r = sparsify_cut(inp, task_seed(seed, 0xC07), j.value("max_draws", 1000));
    if (!r.success) code = 1;
    json out{{"success", r.success},         {"draws", r.draws},
             {"fail_sparse", r.fail_sparse}, {"fail_valid", r.fail_valid},
             {"fail_sep", r.fail_sep},       {"deterministic", r.deterministic},
             {"k", inp.k},
             {"sq_lambda", inp.sq_lambda.str()}};
    if (r.success) out["cut"] = json::parse(cut_to_json(r.cut));
    return out;
  }
  throw parse_error("sparsity: unknown op \"" + op + "\" (dist | bound | sparsify)");
}

json cmd_blocks(const json& j, int& code) {
  std::string op = j.value("op", std::string("graph"));
  MilpInstance inst = inst_from(j);
  Partition part = partition_from(j, inst);
  InteractionGraph g = interaction_graph(inst, part);
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back(json::array({a, b}));
  if (op == "graph") return {{"instance", inst.name}, {"q", g.q}, {"edges", edges}};
  Caps caps = caps_from(j);
  if (op == "chromatic")
    return {{"instance", inst.name},
            {"q", g.q},
            {"edges", edges},
            {"chi_f", fractional_chromatic(g, caps).str()}};
  if (op == "eta") {
    Rational eta = j.contains("eta") ? rat_from(j.at("eta")) : fractional_chromatic(g, caps);
    std::vector<QVec> objectives;
    if (j.contains("objectives"))
      for (const auto& o : j.at("objectives")) objectives.push_back(qvec_from(o));
    else
      objectives.push_back(inst.objective);
    EtaReport rep = verify_eta_bound(inst, part, singleton_supports(g.q), eta, objectives, caps);
    if (!rep.all_ok) code = 1;
    json entries = json::array();
    std::ostringstream cfg;
    cfg << "op=eta q=" << g.q << " eta=" << rep.eta.str();
    std::ostringstream csv;
    csv << csv_head(cfg.str(), seed_from(j), "instance,objective,eta,z_sparse,z_I,pass");
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
      const EtaEntry& e = rep.entries[i];
      entries.push_back({{"objective", qvec_json(e.c)},
                         {"z_sparse", e.z_sparse.str()},
                         {"z_I", e.z_I.str()},
                         {"ok", e.ok}});
      csv << inst.name << ',' << i << ',' << rep.eta.str() << ',' << e.z_sparse.str() << ','
          << e.z_I.str() << ',' << (e.ok ? 1 : 0) << '\n';
    }
    return {{"instance", inst.name},
            {"eta", rep.eta.str()},
            {"entries", entries},
            {"all_ok", rep.all_ok},
            {"csv", csv.str()}};
  }
  throw parse_error("blocks: unknown op \"" + op + "\" (graph | chromatic | eta)");
}

json cmd_agg(const json& j, int& code) {
  std::string op = j.value("op", std::string("closure"));
  Caps caps = caps_from(j);
  std::uint64_t seed = seed_from(j);
  if (op == "cgcompare") {
    MilpInstance inst = (j.contains("instance") || j.contains("gen"))
                            ? inst_from(j)
                            : gen_market_split(2, 6, seed);
    CgCompareReport r = cg_1row_vs_aggregated(inst, j.value("budget", 60), task_seed(seed, 1), caps);
    if (!r.already_integral && r.gap_agg < r.gap_1row) code = 1;
    std::ostringstream cfg;
    cfg << "op=cgcompare budget=" << j.value("budget", 60);
    std::ostringstream csv;
    csv << csv_head(cfg.str(), seed,
                    "instance,z_lp,z_I,z_cut_1row,z_cut_agg,gap_1row,gap_agg,cuts_1row,cuts_agg")
        << inst.name << ',' << r.z_lp.str() << ',' << r.z_I.str() << ',' << r.z_cut_1row.str()
        << ',' << r.z_cut_agg.str() << ',' << r.gap_1row.str() << ',' << r.gap_agg.str() << ','
        << r.cuts_1row << ',' << r.cuts_agg << '\n';
    return {{"instance", inst.name},
            {"z_lp", r.z_lp.str()},
            {"z_I", r.z_I.str()},
            {"z_cut_1row", r.z_cut_1row.str()},
            {"z_cut_agg", r.z_cut_agg.str()},
            {"gap_1row", r.gap_1row.str()},
            {"gap_agg", r.gap_agg.str()},
            {"already_integral", r.already_integral},
            {"cuts_1row", r.cuts_1row},
            {"cuts_agg", r.cuts_agg},
            {"csv", csv.str()}};
  }
  MilpInstance inst = inst_from(j);
  if (op == "closure") {
    ClosureApprox ca;
    if (j.value("one_row", false)) {
      ca = one_row_closure(inst, caps);
    } else {
      AggSampler s;
      if (j.contains("max_entry")) s.max_entry = j.at("max_entry").get<long>();
      if (j.contains("max_support")) s.max_support = j.at("max_support").get<int>();
      if (j.contains("include_units")) s.include_units = j.at("include_units").get<bool>();
      if (j.contains("extra"))
        for (const auto& e : j.at("extra")) s.extra.push_back(qvec_from(e));
      ca = aggregation_closure_outer(inst, s, j.value("budget", 0), task_seed(seed, 1), caps);
    }
    QVec c = j.contains("objective") ? qvec_from(j.at("objective")) : inst.objective;
    Rational val = closure_value(ca, c, Opt::max);
    return {{"instance", inst.name},
            {"exact", ca.exact},
            {"multipliers", ca.multipliers.size()},
            {"skipped", ca.skipped},
            {"value", val.str()},
            {"cuts", cuts_json(ca.cuts)}};
  }
  std::vector<QVec> objectives;
  if (j.contains("objectives"))
    for (const auto& o : j.at("objectives")) objectives.push_back(qvec_from(o));
  else
    objectives.push_back(inst.objective);
  int budget = j.value("budget", 6);
  if (op == "thm4") {
    ThmAggReport rep = verify_thm_agg(inst, objectives, budget, task_seed(seed, 1), caps);
    // Units-only outer closure under the same caps, for the 1-row column.
    ClosureApprox units = aggregation_closure_outer(inst, AggSampler{}, 0, task_seed(seed, 2), caps);
    if (!rep.all_ok) code = 1;
    json entries = json::array();
    std::ostringstream cfg;
    cfg << "op=thm4 budget=" << budget << " z_1row=units-only-outer";
    std::ostringstream csv;
    csv << csv_head(cfg.str(), seed, "instance,objective,z_LP,z_1row,z_agg_outer,z_I,ratio,bound,pass");
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
      const ThmAggEntry& e = rep.entries[i];
      Rational z1 = closure_value(units, e.c, Opt::max);
      bool pass = e.surrogate_ok && e.implied_ok && e.sandwich_ok;
      std::string ratio = e.z_I.is_zero() ? std::string("-") : (e.z_lp / e.z_I).str();
      entries.push_back({{"objective", qvec_json(e.c)},
                         {"z_lp", e.z_lp.str()},
                         {"z_1row", z1.str()},
                         {"z_agg_outer", e.z_agg_outer.str()},
                         {"z_I", e.z_I.str()},
                         {"surrogate_ok", e.surrogate_ok},
                         {"implied_ok", e.implied_ok},
                         {"sandwich_ok", e.sandwich_ok}});
      csv << inst.name << ',' << i << ',' << e.z_lp.str() << ',' << z1.str() << ','
          << e.z_agg_outer.str() << ',' << e.z_I.str() << ',' << ratio << ",2," << (pass ? 1 : 0)
          << '\n';
    }
    return {{"instance", inst.name},
            {"entries", entries},
            {"skipped", rep.skipped},
            {"all_ok", rep.all_ok},
            {"csv", csv.str()}};
  }
  if (op == "signpat") {
    SignPatternReport rep = sign_pattern_experiment(inst, objectives, budget, task_seed(seed, 1), caps);
    if (!rep.all_ok) code = 1;
    json entries = json::array();
    std::ostringstream cfg;
    cfg << "op=signpat budget=" << budget;
    std::ostringstream csv;
    csv << csv_head(cfg.str(), seed, "instance,objective,z_LP,z_1row,z_agg_outer,z_I,ratio,bound,pass");
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
      const SignPatternEntry& e = rep.entries[i];
      LpResult lp = solve_lp(lp_relaxation(inst), true, e.c, Opt::max);
      std::string zlp = lp.status == LpStatus::optimal ? lp.value.str() : std::string("-");
      std::string ratio =
          e.z_agg_outer.is_zero() ? std::string("1") : (e.z_1row / e.z_agg_outer).str();
      entries.push_back({{"objective", qvec_json(e.c)},
                         {"z_1row", e.z_1row.str()},
                         {"z_agg_outer", e.z_agg_outer.str()},
                         {"ok", e.ok}});
      csv << inst.name << ',' << i << ',' << zlp << ',' << e.z_1row.str() << ','
          << e.z_agg_outer.str() << ",-," << ratio << ",2," << (e.ok ? 1 : 0) << '\n';
    }
    return {{"instance", inst.name},
            {"entries", entries},
            {"skipped", rep.skipped},
            {"all_ok", rep.all_ok},
            {"csv", csv.str()}};
  }
  throw parse_error("agg: unknown op \"" + op + "\" (closure | thm4 | signpat | cgcompare)");
}

json cmd_verify_all(const json& j, int& code) {
  std::uint64_t seed = j.value("seed", kDefaultAcceptanceSeed);
  Caps caps = caps_from(j);
  AcceptanceResult res = run_acceptance(seed, caps);
  ExpResult fam = exp_cancel_family(task_seed(seed, 11), caps);
  json arr = json::array();
  for (const auto& c : res.criteria)
    arr.push_back(
        {{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"summary", c.summary}, {"csv", c.csv}});
  json extra = json::array();
  extra.push_back({{"name", "aggregation-family-growth"},
                   {"pass", fam.pass},
                   {"summary", fam.summary},
                   {"csv", fam.csv}});
  bool all = res.all_pass && fam.pass;
  if (!all) code = 1;
  return {{"seed", seed}, {"criteria", arr}, {"extra", extra}, {"all_pass", all}};
}

json err_doc(const std::string& status, const std::string& msg) {
  return {{"error", {{"status", status}, {"message", msg}}}};
}

}  // namespace

extern "C" {

const char* cutlab_version(void) {
  static const std::string v = artifact_version();
  return v.c_str();
}

const char* cutlab_last_error(void) { return t_err.c_str(); }

void cutlab_free(char* buf) { std::free(buf); }

cutlab_instance* cutlab_instance_parse(const char* text) {
  t_err.clear();
  try {
    return new cutlab_instance{instance_from_json(text ? text : "")};
  } catch (const std::exception& e) {
    t_err = e.what();
    return nullptr;
  }
}

char* cutlab_instance_json(const cutlab_instance* inst) {
  t_err.clear();
  if (!inst) {
    t_err = "null instance";
    return nullptr;
  }
  return dup0(instance_to_json(inst->inst));
}

void cutlab_instance_free(cutlab_instance* inst) { delete inst; }

cutlab_instance* cutlab_generate(const char* kind, const char* params_json, uint64_t seed) {
  t_err.clear();
  try {
    std::map<std::string, long> params;
    if (params_json && *params_json) {
      json p = json::parse(params_json);
      for (const auto& [k, v] : p.items()) params[k] = v.get<long>();
    }
    return new cutlab_instance{generate(kind ? kind : "", params, seed)};
  } catch (const std::exception& e) {
    t_err = e.what();
    return nullptr;
  }
}

char* cutlab_classify(const cutlab_instance* inst) {
  t_err.clear();
  if (!inst) {
    t_err = "null instance";
    return nullptr;
  }
  try {
    return dup0(json(classify(inst->inst)).dump());
  } catch (const std::exception& e) {
    t_err = e.what();
    return nullptr;
  }
}

char* cutlab_gomory(const cutlab_instance* inst, const char* caps_json) {
  t_err.clear();
  if (!inst) {
    t_err = "null instance";
    return nullptr;
  }
  try {
    json j;
    if (caps_json && *caps_json) j["caps"] = json::parse(caps_json);
    j["instance"] = json::parse(instance_to_json(inst->inst));
    return dup0(cmd_gomory(j).dump());
  } catch (const std::exception& e) {
    t_err = e.what();
    return nullptr;
  }
}

char* cutlab_run(const char* command_json, int* exit_code) {
  t_err.clear();
  int code = 0;
  json out;
  try {
    if (!command_json) throw parse_error("null command document");
    json cmd = json::parse(command_json);
    std::string c = cmd.at("command").get<std::string>();
    if (c == "version") out = {{"version", artifact_version()}};
    else if (c == "gen") out = cmd_gen(cmd);
    else if (c == "classify") out = cmd_classify(cmd);
    else if (c == "cuts") out = cmd_cuts(cmd, code);
    else if (c == "select") out = cmd_select(cmd, code);
    else if (c == "gomory") out = cmd_gomory(cmd);
    else if (c == "sparsity") out = cmd_sparsity(cmd, code);
    else if (c == "blocks") out = cmd_blocks(cmd, code);
    else if (c == "agg") out = cmd_agg(cmd, code);
    else if (c == "verify-all") out = cmd_verify_all(cmd, code);
    else throw parse_error("unknown command \"" + c + "\"");
  } catch (const json::exception& e) {
    t_err = e.what();
    out = err_doc("parse", e.what());
    code = 2;
  } catch (const Error& e) {
    t_err = e.what();
    bool usage = e.code == Error::Code::parse || e.code == Error::Code::domain;
    out = err_doc(code_name(e.code), e.what());
    code = usage ? 2 : 1;
  } catch (const std::exception& e) {
    t_err = e.what();
    out = err_doc("internal", e.what());
    code = 1;
  }
  if (exit_code) *exit_code = code;
  return dup0(out.dump(2));
}

}  // extern "C"
