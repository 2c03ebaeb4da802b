#include "cutlab/instance.hpp"

#include "cutlab/error.hpp"

#include <algorithm>
#include <set>

namespace cutlab {

std::string sense_str(Sense s) {
  switch (s) {
    case Sense::le: return "<=";
    case Sense::ge: return ">=";
    case Sense::eq: return "=";
  }
  throw domain_error("bad sense");
}

Sense sense_from_str(const std::string& s) {
  if (s == "<=") return Sense::le;
  if (s == ">=") return Sense::ge;
  if (s == "=") return Sense::eq;
  throw parse_error("unknown sense token '" + s + "'");
}

bool LinearRow::satisfied_by(const QVec& x) const {
  Rational lhs = eval(x);
  switch (sense) {
    case Sense::le: return lhs <= rhs;
    case Sense::ge: return lhs >= rhs;
    case Sense::eq: return lhs == rhs;
  }
  return false;
}

void MilpInstance::validate() const {
  if (n < 0) throw domain_error("instance '" + name + "': negative dimension");
  if (static_cast<int>(vars.size()) != n)
    throw domain_error("instance '" + name + "': vars size != n");
  if (static_cast<int>(objective.size()) != n)
    throw domain_error("instance '" + name + "': objective size != n");
  for (int j = 0; j < n; ++j) {
    if (vars[j].lb.sign() < 0)
      throw domain_error("instance '" + name + "': negative lower bound on variable " +
                         std::to_string(j));
    if (vars[j].ub && *vars[j].ub < vars[j].lb)
      throw domain_error("instance '" + name + "': empty bound interval on variable " +
                         std::to_string(j));
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (static_cast<int>(rows[i].coeffs.size()) != n)
      throw domain_error("instance '" + name + "': row " + std::to_string(i) +
                         " has wrong coefficient count");
}

bool MilpInstance::pure_integer() const {
  return std::all_of(vars.begin(), vars.end(),
                     [](const Variable& v) { return v.kind == VarKind::integer; });
}

bool MilpInstance::all_bounded() const {
  return std::all_of(vars.begin(), vars.end(),
                     [](const Variable& v) { return v.ub.has_value(); });
}

std::vector<std::string> classify(const MilpInstance& inst) {
  std::vector<std::string> tags;
  tags.push_back(inst.pure_integer() ? "pure-integer" : "mixed");

  bool packing = !inst.rows.empty(), covering = !inst.rows.empty(), equality = !inst.rows.empty();
  for (const auto& row : inst.rows) {
    if (row.sense != Sense::le || row.rhs.sign() < 0) packing = false;
    if (row.sense != Sense::ge || row.rhs.sign() < 0) covering = false;
    if (row.sense != Sense::eq) equality = false;
    for (const auto& a : row.coeffs)
      if (a.sign() < 0) { packing = false; covering = false; }
  }
  if (packing) tags.push_back("packing");
  if (covering) tags.push_back("covering");
  if (equality) tags.push_back("equality-form");

  bool sign_pattern = !inst.rows.empty();
  for (int j = 0; j < inst.n && sign_pattern; ++j) {
    int seen = 0;
    for (const auto& row : inst.rows) {
      int s = row.coeffs[j].sign();
      if (s == 0) continue;
      if (seen == 0) seen = s;
      else if (seen != s) { sign_pattern = false; break; }
    }
  }
  if (sign_pattern) tags.push_back("sign-pattern");
  return tags;
}

MilpInstance preprocess_packing(const MilpInstance& inst, PreprocessReport* report) {
  auto tags = classify(inst);
  if (std::find(tags.begin(), tags.end(), "packing") == tags.end())
    throw domain_error("preprocess_packing: instance '" + inst.name + "' is not packing form");

  std::vector<bool> fixed(inst.n, false);
  for (const auto& row : inst.rows)
    for (int j = 0; j < inst.n; ++j)
      if (row.coeffs[j] > row.rhs) fixed[j] = true;

  PreprocessReport rep;
  for (int j = 0; j < inst.n; ++j)
    (fixed[j] ? rep.fixed_zero : rep.kept).push_back(j);

  MilpInstance out;
  out.name = inst.name + "/preprocessed";
  out.n = static_cast<int>(rep.kept.size());
  out.tags = inst.tags;
  for (int j : rep.kept) {
    out.vars.push_back(inst.vars[j]);
    out.objective.push_back(inst.objective[j]);
  }
  for (const auto& row : inst.rows) {
    LinearRow r;
    r.sense = row.sense;
    r.rhs = row.rhs;
    for (int j : rep.kept) r.coeffs.push_back(row.coeffs[j]);
    out.rows.push_back(std::move(r));
  }
  if (report) *report = rep;
  return out;
}

void Partition::validate(int n) const {
  std::set<int> seen;
  for (const auto& b : blocks) {
    if (b.empty()) throw domain_error("partition: empty block");
    for (int v : b) {
      if (v < 0 || v >= n) throw domain_error("partition: variable index out of range");
      if (!seen.insert(v).second) throw domain_error("partition: variable in two blocks");
    }
  }
  if (static_cast<int>(seen.size()) != n) throw domain_error("partition: does not cover all variables");
}

int Partition::block_of(int var) const {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int v : blocks[b])
      if (v == var) return static_cast<int>(b);
  throw domain_error("partition: variable not in any block");
}

}  // namespace cutlab
