#include "cutlab/instance_io.hpp"

#include "cutlab/caps.hpp"
#include "cutlab/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace cutlab {

using nlohmann::json;

namespace {

Rational parse_rat(const json& j, const std::string& where) {
  if (!j.is_string()) throw parse_error(where + ": rational must be a \"p/q\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw parse_error(where + ": " + e.what());
  }
}

QVec parse_vec(const json& j, const std::string& where, int n) {
  if (!j.is_array()) throw parse_error(where + ": expected an array");
  if (static_cast<int>(j.size()) != n)
    throw parse_error(where + ": expected " + std::to_string(n) + " entries, got " +
                      std::to_string(j.size()));
  QVec v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(parse_rat(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

const json& field(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw parse_error(where + ": missing field '" + key + "'");
  return *it;
}

json rat_str(const Rational& r) { return r.str(); }

json vec_json(const QVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_str(x));
  return a;
}

}  // namespace

std::string instance_to_json(const MilpInstance& inst) {
  json j;
  j["name"] = inst.name;
  j["n"] = inst.n;
  json vars = json::array();
  for (const auto& v : inst.vars) {
    json jv;
    jv["kind"] = v.kind == VarKind::integer ? "int" : "cont";
    jv["lb"] = rat_str(v.lb);
    jv["ub"] = v.ub ? json(v.ub->str()) : json("inf");
    vars.push_back(jv);
  }
  j["vars"] = vars;
  json rows = json::array();
  for (const auto& r : inst.rows) {
    json jr;
    jr["coeffs"] = vec_json(r.coeffs);
    jr["sense"] = sense_str(r.sense);
    jr["rhs"] = rat_str(r.rhs);
    rows.push_back(jr);
  }
  j["rows"] = rows;
  j["objective"] = vec_json(inst.objective);
  j["tags"] = inst.tags;
  return j.dump(2) + "\n";
}

MilpInstance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("instance JSON: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("instance JSON: top level must be an object");

  MilpInstance inst;
  const json& name = field(j, "name", "instance");
  if (!name.is_string()) throw parse_error("name: expected a string");
  inst.name = name.get<std::string>();

  const json& n = field(j, "n", "instance");
  if (!n.is_number_integer() || n.get<long>() < 0) throw parse_error("n: expected a nonnegative integer");
  inst.n = n.get<int>();

  const json& vars = field(j, "vars", "instance");
  if (!vars.is_array()) throw parse_error("vars: expected an array");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::string where = "vars[" + std::to_string(i) + "]";
    const json& jv = vars[i];
    if (!jv.is_object()) throw parse_error(where + ": expected an object");
    Variable v;
    const json& kind = field(jv, "kind", where);
    if (kind == "int") {
      v.kind = VarKind::integer;
    } else if (kind == "cont") {
      v.kind = VarKind::continuous;
    } else {
      throw parse_error(where + ".kind: expected \"int\" or \"cont\"");
    }
    v.lb = parse_rat(field(jv, "lb", where), where + ".lb");
    const json& ub = field(jv, "ub", where);
    if (ub.is_string() && ub.get<std::string>() == "inf") {
      v.ub.reset();
    } else {
      v.ub = parse_rat(ub, where + ".ub");
    }
    inst.vars.push_back(v);
  }

  const json& rows = field(j, "rows", "instance");
  if (!rows.is_array()) throw parse_error("rows: expected an array");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string where = "rows[" + std::to_string(i) + "]";
    const json& jr = rows[i];
    if (!jr.is_object()) throw parse_error(where + ": expected an object");
    LinearRow r;
    r.coeffs = parse_vec(field(jr, "coeffs", where), where + ".coeffs", inst.n);
    const json& sense = field(jr, "sense", where);
    if (!sense.is_string()) throw parse_error(where + ".sense: expected a string");
    try {
      r.sense = sense_from_str(sense.get<std::string>());
    } catch (const std::exception&) {
      throw parse_error(where + ".sense: unknown sense token '" + sense.get<std::string>() + "'");
    }
    r.rhs = parse_rat(field(jr, "rhs", where), where + ".rhs");
    inst.rows.push_back(r);
  }

  inst.objective = parse_vec(field(j, "objective", "instance"), "objective", inst.n);

  const json& tags = field(j, "tags", "instance");
  if (!tags.is_array()) throw parse_error("tags: expected an array");
  for (const auto& t : tags) {
    if (!t.is_string()) throw parse_error("tags: entries must be strings");
    inst.tags.push_back(t.get<std::string>());
  }

  try {
    inst.validate();
  } catch (const std::exception& e) {
    throw parse_error(std::string("instance invalid: ") + e.what());
  }
  return inst;
}

MilpInstance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_json(buf.str());
}

void write_instance(const MilpInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw domain_error("cannot write '" + path + "'");
  out << instance_to_json(inst);
}

void Caps::apply_json(const std::string& text) {
  if (text.empty()) return;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("caps JSON: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("caps JSON: expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_number_integer()) throw parse_error("caps." + it.key() + ": expected an integer");
    long v = it.value().get<long>();
    if (v < 0) throw parse_error("caps." + it.key() + ": must be nonnegative");
    if (it.key() == "cap_n") {
      vertex_enum_dim = static_cast<int>(v);
    } else if (it.key() == "cap_points") {
      distance_points = static_cast<int>(v);
    } else if (it.key() == "cap_cells") {
      hull_box_cells = v;
    } else if (it.key() == "cap_gomory") {
      gomory_iters = static_cast<int>(v);
    } else if (it.key() == "cap_nodes") {
      chromatic_nodes = static_cast<int>(v);
    } else if (it.key() == "budget_ms") {
      budget_ms = v;
    } else {
      throw parse_error("caps: unknown key '" + it.key() + "'");
    }
  }
}

std::string Caps::to_json() const {
  json j;
  j["cap_n"] = vertex_enum_dim;
  j["cap_points"] = distance_points;
  j["cap_cells"] = hull_box_cells;
  j["cap_gomory"] = gomory_iters;
  j["cap_nodes"] = chromatic_nodes;
  j["budget_ms"] = budget_ms;
  return j.dump();
}

}  // namespace cutlab
