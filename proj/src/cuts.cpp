#include "cutlab/cuts.hpp"

#include "cutlab/error.hpp"
#include "cutlab/polytope.hpp"
#include "cutlab/rng.hpp"

#include <json.hpp>

#include <algorithm>

namespace cutlab {

using nlohmann::json;

std::vector<int> Cut::support() const {
  std::vector<int> s;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (!coeffs[j].is_zero()) s.push_back(static_cast<int>(j));
  return s;
}

Rational cut_violation(const Cut& c, const QVec& x) {
  Rational lhs = dot(c.coeffs, x);
  return c.sense == Sense::le ? lhs - c.rhs : c.rhs - lhs;
}

namespace {

json vec_json(const QVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Rational rat_field(const json& j, const std::string& where) {
  if (!j.is_string()) throw parse_error(where + ": rational must be a \"p/q\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw parse_error(where + ": " + e.what());
  }
}

json cut_json(const Cut& c) {
  json j;
  j["coeffs"] = vec_json(c.coeffs);
  j["sense"] = sense_str(c.sense);
  j["rhs"] = c.rhs.str();
  json prov;
  prov["generator"] = c.provenance.generator;
  if (!c.provenance.multipliers.empty()) prov["multipliers"] = vec_json(c.provenance.multipliers);
  if (!c.provenance.source_rows.empty()) prov["source_rows"] = c.provenance.source_rows;
  if (c.provenance.basic_var >= 0) prov["basic_var"] = c.provenance.basic_var;
  if (!c.provenance.note.empty()) prov["note"] = c.provenance.note;
  j["provenance"] = prov;
  return j;
}

Cut cut_from(const json& j) {
  if (!j.is_object()) throw parse_error("cut JSON: expected an object");
  Cut c;
  auto coeffs = j.find("coeffs");
  if (coeffs == j.end() || !coeffs->is_array()) throw parse_error("cut JSON: missing coeffs array");
  for (std::size_t i = 0; i < coeffs->size(); ++i)
    c.coeffs.push_back(rat_field((*coeffs)[i], "coeffs[" + std::to_string(i) + "]"));
  auto sense = j.find("sense");
  if (sense == j.end() || !sense->is_string()) throw parse_error("cut JSON: missing sense");
  c.sense = sense_from_str(sense->get<std::string>());
  if (c.sense == Sense::eq) throw parse_error("cut JSON: cuts are le or ge, never eq");
  auto rhs = j.find("rhs");
  if (rhs == j.end()) throw parse_error("cut JSON: missing rhs");
  c.rhs = rat_field(*rhs, "rhs");
  auto prov = j.find("provenance");
  if (prov != j.end() && prov->is_object()) {
    auto gen = prov->find("generator");
    if (gen != prov->end() && gen->is_string()) c.provenance.generator = gen->get<std::string>();
    auto mult = prov->find("multipliers");
    if (mult != prov->end() && mult->is_array())
      for (std::size_t i = 0; i < mult->size(); ++i)
        c.provenance.multipliers.push_back(rat_field((*mult)[i], "multipliers"));
    auto src = prov->find("source_rows");
    if (src != prov->end() && src->is_array())
      for (const auto& s : *src) c.provenance.source_rows.push_back(s.get<int>());
    auto bv = prov->find("basic_var");
    if (bv != prov->end() && bv->is_number_integer()) c.provenance.basic_var = bv->get<int>();
    auto note = prov->find("note");
    if (note != prov->end() && note->is_string()) c.provenance.note = note->get<std::string>();
  }
  return c;
}

}  // namespace

std::string cut_to_json(const Cut& c) { return cut_json(c).dump(2) + "\n"; }

Cut cut_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("cut JSON: ") + e.what());
  }
  return cut_from(j);
}

std::string cuts_to_json(const std::vector<Cut>& cuts) {
  json a = json::array();
  for (const auto& c : cuts) a.push_back(cut_json(c));
  return a.dump(2) + "\n";
}

Cut aggregate(const MilpInstance& inst, const QVec& lambda, Sense orientation,
              bool equality_any_sign) {
  if (orientation == Sense::eq) throw domain_error("aggregate: orientation must be le or ge");
  if (lambda.size() != inst.rows.size())
    throw domain_error("aggregate: multiplier count != row count");
  Cut c;
  c.coeffs.assign(inst.n, Rational(0));
  c.sense = orientation;
  c.provenance.generator = "aggregation";
  c.provenance.multipliers = lambda;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const LinearRow& row = inst.rows[i];
    if (lambda[i].sign() < 0 && !(row.sense == Sense::eq && equality_any_sign))
      throw domain_error("aggregate: negative multiplier on row " + std::to_string(i));
    if (lambda[i].is_zero()) continue;
    c.provenance.source_rows.push_back(static_cast<int>(i));
    // opposite-sense rows contribute negated; equalities go in as-is
    bool flip = (orientation == Sense::le && row.sense == Sense::ge) ||
                (orientation == Sense::ge && row.sense == Sense::le);
    Rational f = flip ? -lambda[i] : lambda[i];
    for (int j = 0; j < inst.n; ++j) c.coeffs[j] += f * row.coeffs[j];
    c.rhs += f * row.rhs;
  }
  return c;
}

Cut cg_cut(const LinearRow& row, const std::vector<Variable>& vars) {
  if (row.sense == Sense::eq) throw domain_error("cg_cut: orient the equality row first");
  for (std::size_t j = 0; j < row.coeffs.size(); ++j)
    if (!row.coeffs[j].is_zero() && vars[j].kind != VarKind::integer)
      throw domain_error("cg_cut: continuous variable " + std::to_string(j) +
                         " in support, CG undefined");
  Cut c;
  c.sense = row.sense;
  c.provenance.generator = "cg";
  if (row.sense == Sense::le) {
    for (const auto& a : row.coeffs) c.coeffs.push_back(floor(a));
    c.rhs = floor(row.rhs);
  } else {
    for (const auto& a : row.coeffs) c.coeffs.push_back(ceil(a));
    c.rhs = ceil(row.rhs);
  }
  return c;
}

Cut mir_cut(const MirEmbedding& emb, const std::vector<Variable>& vars) {
  if (emb.int_part.size() != vars.size() || emb.cont_part.size() != vars.size())
    throw domain_error("mir_cut: embedding dimension mismatch");
  Rational f = frac(emb.rhs);
  if (f.is_zero()) throw domain_error("MIR undefined for integral rhs");
  for (std::size_t j = 0; j < vars.size(); ++j) {
    if (!emb.int_part[j].is_zero() &&
        (vars[j].kind != VarKind::integer || !emb.int_part[j].is_integer()))
      throw domain_error("mir_cut: integer part must use integral coefficients on integer variables");
    if (emb.cont_part[j].sign() < 0)
      throw domain_error("mir_cut: continuous part must be componentwise nonnegative");
  }
  Cut c;
  c.sense = Sense::ge;
  c.rhs = ceil(emb.rhs);
  Rational inv_f = Rational(1) / f;
  for (std::size_t j = 0; j < vars.size(); ++j)
    c.coeffs.push_back(emb.int_part[j] + inv_f * emb.cont_part[j]);
  c.provenance.generator = "mir";
  c.provenance.note = emb.name;
  return c;
}

MirEmbedding mir_embed_ge_row(const LinearRow& row, const std::vector<Variable>& vars) {
  if (row.sense != Sense::ge) throw domain_error("mir_embed_ge_row: row must be ge");
  MirEmbedding emb;
  emb.name = "ge-row";
  emb.rhs = row.rhs;
  emb.int_part.assign(vars.size(), Rational(0));
  emb.cont_part.assign(vars.size(), Rational(0));
  for (std::size_t j = 0; j < vars.size(); ++j) {
    if (vars[j].kind == VarKind::integer && row.coeffs[j].is_integer())
      emb.int_part[j] = row.coeffs[j];
    else if (row.coeffs[j].sign() >= 0)
      emb.cont_part[j] = row.coeffs[j];
    else
      throw domain_error("mir_embed_ge_row: negative remainder coefficient on variable " +
                         std::to_string(j));
  }
  return emb;
}

MirEmbedding mir_embed_le_complement(const LinearRow& row, const std::vector<Variable>& vars) {
  if (row.sense != Sense::le) throw domain_error("mir_embed_le_complement: row must be le");
  MirEmbedding emb;
  emb.name = "le-complement";
  emb.rhs = -row.rhs;
  emb.int_part.assign(vars.size(), Rational(0));
  emb.cont_part.assign(vars.size(), Rational(0));
  for (std::size_t j = 0; j < vars.size(); ++j) {
    if (row.coeffs[j].is_zero()) continue;
    if (vars[j].kind != VarKind::integer || !row.coeffs[j].is_integer())
      throw domain_error("mir_embed_le_complement: needs integral integer-variable support");
    emb.int_part[j] = -row.coeffs[j];
  }
  return emb;
}

QVec gmic_coeffs(const QVec& a, const std::vector<VarKind>& kinds, const Rational& b) {
  if (a.size() != kinds.size()) throw domain_error("gmic_coeffs: kind vector mismatch");
  Rational f0 = frac(b);
  if (f0.is_zero()) throw domain_error("gmic: rhs is integral, no cut");
  Rational one_m_f0 = Rational(1) - f0;
  QVec c;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (kinds[j] == VarKind::integer) {
      Rational fj = frac(a[j]);
      c.push_back(min(fj / f0, (Rational(1) - fj) / one_m_f0));
    } else {
      const Rational& g = a[j];
      c.push_back(max(g / f0, -g / one_m_f0));
    }
  }
  return c;
}

GmicResult gmic(const MilpInstance& inst, const HPolytope& relaxation, const Tableau& tab,
                int row) {
  if (row < 0 || row >= static_cast<int>(tab.rows.size()))
    throw domain_error("gmic: tableau row out of range");
  const TableauRowData& tr = tab.rows[row];
  const TableauCol& basic = tab.cols[tr.basic_col];
  if (basic.kind != TableauCol::structural || inst.vars[basic.index].kind != VarKind::integer)
    throw domain_error("gmic: basic variable must be a structural integer variable");
  if (frac(tr.rhs).is_zero()) throw domain_error("gmic: rhs is integral, no cut");

  QVec a;
  std::vector<VarKind> kinds;
  for (std::size_t j = 0; j < tab.cols.size(); ++j) {
    if (static_cast<int>(j) == tr.basic_col) {
      a.push_back(Rational(0));  // formula yields 0 here; keeps alignment
      kinds.push_back(VarKind::continuous);
      continue;
    }
    a.push_back(tr.coeffs[j]);
    kinds.push_back(tab.cols[j].kind == TableauCol::structural
                        ? inst.vars[tab.cols[j].index].kind
                        : VarKind::continuous);
  }
  QVec tc = gmic_coeffs(a, kinds, tr.rhs);
  tc[tr.basic_col] = Rational(0);

  // Substitute slack definitions: s_i = b_i - a_i.x (le row) / a_i.x - b_i (ge).
  GmicResult res;
  res.tableau_coeffs = tc;
  Cut& cut = res.cut;
  cut.sense = Sense::ge;
  cut.rhs = Rational(1);
  cut.coeffs.assign(inst.n, Rational(0));
  cut.provenance.generator = "gmic";
  cut.provenance.basic_var = basic.index;
  for (std::size_t j = 0; j < tab.cols.size(); ++j) {
    if (tc[j].is_zero()) continue;
    if (tab.cols[j].kind == TableauCol::structural) {
      cut.coeffs[tab.cols[j].index] += tc[j];
    } else {
      const LinearRow& src = relaxation.rows[tab.cols[j].index];
      Rational sgn = src.sense == Sense::le ? Rational(-1) : Rational(1);
      for (int v = 0; v < inst.n; ++v) cut.coeffs[v] += tc[j] * sgn * src.coeffs[v];
      cut.rhs += tc[j] * sgn * src.rhs;  // constant term moves to the rhs
      cut.provenance.source_rows.push_back(tab.cols[j].index);
    }
  }
  return res;
}

SubadditiveCheck check_subadditive(const SubadditiveFn& f, const std::vector<QVec>& probes,
                                   std::uint64_t seed) {
  SubadditiveCheck rep;
  QVec zero(f.m, Rational(0));
  if (!f.eval(zero).is_zero()) {
    rep.pass = false;
    rep.condition = "f(0)=0";
    return rep;
  }

  std::vector<QVec> pts = probes;
  pts.push_back(zero);
  // seeded extras from the probes' integer bounding box
  Rational hi(1);
  for (const auto& p : probes)
    for (const auto& x : p) hi = max(hi, abs(x));
  long box = mpz_get_si(ceil(hi).num().get_mpz_t());
  Rng rng(seed);
  for (int extra = 0; extra < 8; ++extra) {
    QVec p;
    for (int i = 0; i < f.m; ++i) p.push_back(Rational(rng.range(0, box)));
    pts.push_back(p);
  }

  auto leq = [](const QVec& u, const QVec& v) {
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] > v[i]) return false;
    return true;
  };
  for (const auto& u : pts)
    for (const auto& v : pts) {
      if (leq(u, v) && f.eval(u) > f.eval(v)) {
        rep.pass = false;
        rep.condition = "monotone";
        rep.witness_u = u;
        rep.witness_v = v;
        return rep;
      }
      if (f.eval(add(u, v)) > f.eval(u) + f.eval(v)) {
        rep.pass = false;
        rep.condition = "subadditive";
        rep.witness_u = u;
        rep.witness_v = v;
        return rep;
      }
    }
  return rep;
}

Cut subadditive_cut(const SubadditiveFn& f, const MilpInstance& inst, std::uint64_t seed) {
  if (!inst.pure_integer()) throw domain_error("subadditive_cut: instance must be pure integer");
  if (f.m != static_cast<int>(inst.rows.size()))
    throw domain_error("subadditive_cut: domain dimension != row count");
  std::vector<QVec> probes;
  for (int j = 0; j < inst.n; ++j) {
    QVec col;
    for (const auto& row : inst.rows) {
      if (row.sense != Sense::ge)
        throw domain_error("subadditive_cut: instance must be in Ax >= b form");
      col.push_back(row.coeffs[j]);
    }
    probes.push_back(col);
  }
  QVec b;
  for (const auto& row : inst.rows) b.push_back(row.rhs);
  probes.push_back(b);

  SubadditiveCheck chk = check_subadditive(f, probes, seed);
  if (!chk.pass) {
    std::string msg = "subadditive_cut: '" + f.name + "' fails " + chk.condition;
    if (!chk.witness_u.empty()) {
      msg += " at u=(";
      for (std::size_t i = 0; i < chk.witness_u.size(); ++i)
        msg += (i ? "," : "") + chk.witness_u[i].str();
      msg += "), v=(";
      for (std::size_t i = 0; i < chk.witness_v.size(); ++i)
        msg += (i ? "," : "") + chk.witness_v[i].str();
      msg += ")";
    }
    throw domain_error(msg);
  }

  Cut c;
  c.sense = Sense::ge;
  for (int j = 0; j < inst.n; ++j) c.coeffs.push_back(f.eval(probes[j]));
  c.rhs = f.eval(b);
  c.provenance.generator = "subadditive";
  c.provenance.note = f.name;
  return c;
}

bool cut_valid(const MilpInstance& inst, const Cut& c, const Caps& caps) {
  if (inst.pure_integer()) {
    for (const QVec& p : integer_points(inst, caps))
      if (!c.satisfied_by(p)) return false;
    return true;
  }
  for (const QVec& v : integer_hull(inst, caps).points)
    if (!c.satisfied_by(v)) return false;
  return true;
}

}  // namespace cutlab
