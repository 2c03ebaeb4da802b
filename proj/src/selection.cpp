#include "cutlab/selection.hpp"

#include "cutlab/error.hpp"

#include <json.hpp>

#include <algorithm>

namespace cutlab {

using nlohmann::json;

void CutPool::add(Cut c) {
  for (const auto& x : xstars)
    if (cut_violation(c, x).sign() > 0) {
      cuts.push_back(std::move(c));
      return;
    }
  throw domain_error("CutPool::add: cut separates no recorded point");
}

Rational sq_depth(const Cut& c, const QVec& xstar) {
  Rational nrm = sq_norm(c.coeffs);
  if (nrm.is_zero()) throw domain_error("sq_depth: zero coefficient vector");
  Rational v = cut_violation(c, xstar);
  if (v.sign() <= 0) return Rational(0);
  return v * v / nrm;
}

Rational sq_parallelism(const Cut& c1, const Cut& c2) {
  Rational n1 = sq_norm(c1.coeffs), n2 = sq_norm(c2.coeffs);
  if (n1.is_zero() || n2.is_zero()) throw domain_error("sq_parallelism: zero coefficient vector");
  Rational d = dot(c1.coeffs, c2.coeffs);
  return d * d / (n1 * n2);
}

Rational dynamism(const Cut& c) {
  Rational lo, hi;
  bool seen = false;
  for (const auto& a : c.coeffs) {
    if (a.is_zero()) continue;
    Rational v = abs(a);
    if (!seen) {
      lo = hi = v;
      seen = true;
    } else {
      lo = min(lo, v);
      hi = max(hi, v);
    }
  }
  if (!seen) throw domain_error("dynamism: empty support");
  return hi / lo;
}

Policy Policy::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("policy JSON: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("policy JSON: expected an object");
  Policy p;
  auto rat = [&](const char* key) -> std::optional<Rational> {
    auto it = j.find(key);
    if (it == j.end()) return std::nullopt;
    if (!it->is_string()) throw parse_error(std::string("policy.") + key + ": expected a \"p/q\" string");
    try {
      return Rational::parse(it->get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw parse_error(std::string("policy.") + key + ": " + e.what());
    }
  };
  p.w_depth = rat("w_depth");
  p.w_sparsity = rat("w_sparsity");
  p.w_dynamism = rat("w_dynamism");
  p.tau = rat("tau");
  p.d_max = rat("D");
  auto k = j.find("K");
  if (k != j.end()) {
    if (!k->is_number_integer()) throw parse_error("policy.K: expected an integer");
    p.k_max = k->get<int>();
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key != "w_depth" && key != "w_sparsity" && key != "w_dynamism" && key != "tau" &&
        key != "K" && key != "D")
      throw parse_error("policy JSON: unknown key '" + key + "'");
  }
  return p;
}

std::string Policy::to_json() const {
  json j;
  if (w_depth) j["w_depth"] = w_depth->str();
  if (w_sparsity) j["w_sparsity"] = w_sparsity->str();
  if (w_dynamism) j["w_dynamism"] = w_dynamism->str();
  if (tau) j["tau"] = tau->str();
  if (d_max) j["D"] = d_max->str();
  if (k_max) j["K"] = *k_max;
  return j.dump();
}

ResolvedPolicy resolve_policy(const Policy& p, int n) {
  if (n <= 0) throw domain_error("resolve_policy: need n >= 1");
  ResolvedPolicy r;
  r.w_depth = p.w_depth.value_or(Rational(1));
  r.w_sparsity = p.w_sparsity.value_or(Rational(1, n));
  r.w_dynamism = p.w_dynamism.value_or(Rational(0));
  r.tau = p.tau.value_or(Rational(9, 10));
  r.d_max = p.d_max.value_or(Rational(1000));
  r.k_max = p.k_max.value_or(10);
  if (r.k_max < 1) throw domain_error("policy: K must be >= 1");
  if (r.tau.sign() < 0 || r.tau > Rational(1)) throw domain_error("policy: tau must be in [0,1]");
  if (r.d_max < Rational(1)) throw domain_error("policy: D must be >= 1");
  return r;
}

std::vector<ScoredCut> select(const CutPool& pool, const QVec& xstar, const ResolvedPolicy& pol,
                              const QVec* objective, const Rational& w_objpar) {
  std::vector<ScoredCut> candidates;
  Cut obj_cut;
  if (objective) obj_cut.coeffs = *objective;

  for (const Cut& c : pool.cuts) {
    if (cut_violation(c, xstar).sign() <= 0) continue;  // stage 1: separators only
    ScoredCut s;
    s.cut = c;
    s.sq_depth_v = sq_depth(c, xstar);
    s.dynamism_v = dynamism(c);
    if (s.dynamism_v > pol.d_max) continue;  // stage 2: dynamism filter
    s.sparsity = static_cast<int>(c.support().size());
    s.composite = pol.w_depth * s.sq_depth_v - pol.w_sparsity * Rational(s.sparsity) -
                  pol.w_dynamism * (s.dynamism_v - Rational(1));
    if (objective && !w_objpar.is_zero())
      s.composite += w_objpar * sq_parallelism(c, obj_cut);
    candidates.push_back(std::move(s));
  }

  // stable: equal composites keep pool insertion order
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const ScoredCut& a, const ScoredCut& b) { return a.composite > b.composite; });

  Rational tau_sq = pol.tau * pol.tau;
  std::vector<ScoredCut> selected;
  for (auto& cand : candidates) {
    if (static_cast<int>(selected.size()) >= pol.k_max) break;
    Rational max_par(0);
    bool ok = true;
    for (const auto& s : selected) {
      Rational par = sq_parallelism(cand.cut, s.cut);
      max_par = max(max_par, par);
      if (par > tau_sq) { ok = false; break; }
    }
    if (!ok) continue;
    cand.max_sq_par_to_selected = max_par;
    selected.push_back(cand);
  }
  return selected;
}

}  // namespace cutlab
