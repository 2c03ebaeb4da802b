// Command-line front end: every subcommand assembles one JSON command
// document and hands it to cutlab_run from the C API; this file never calls
// the C++ core directly. Exit codes: 0 success, 1 failed verification inside
// the command, 2 usage or input errors.

#include "cutlab/cutlab.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct CommonOpts {
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string out;
  std::string caps;  // inline JSON or a file path
  std::optional<std::int64_t> cap_n, cap_points, cap_cells, cap_gomory, cap_nodes;
};

// Inline JSON if the argument starts with '{', otherwise a file to read.
json json_arg(const std::string& arg, const char* what) {
  if (!arg.empty() && arg.front() == '{') return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw CLI::ValidationError(std::string(what) + ": cannot open '" + arg + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return json::parse(ss.str());
}

// Comma-separated rationals ("1,1/2,-3") as a JSON array of strings.
json vec_arg(const std::string& s) {
  json a = json::array();
  std::string tok;
  std::stringstream ss(s);
  while (std::getline(ss, tok, ',')) a.push_back(tok);
  return a;
}

void add_common(CLI::App* cmd, CommonOpts& c, bool with_seed = true) {
  if (with_seed) cmd->add_option("--seed", c.seed, "master seed (default 0)")->each([&c](const std::string&) { c.seed_set = true; });
  cmd->add_option("-o,--out", c.out, "write the result here (.csv writes the CSV report)");
  cmd->add_option("--caps", c.caps, "resource caps, inline JSON or a file");
  cmd->add_option("--cap-n", c.cap_n, "vertex-enumeration dimension cap");
  cmd->add_option("--cap-points", c.cap_points, "distance-scan point cap");
  cmd->add_option("--cap-cells", c.cap_cells, "hull box-cell cap");
  cmd->add_option("--cap-gomory", c.cap_gomory, "rounding-loop iteration cap");
  cmd->add_option("--cap-nodes", c.cap_nodes, "chromatic-number node cap");
}

void apply_common(json& cmd, const CommonOpts& c) {
  if (c.seed_set) cmd["seed"] = c.seed;
  json caps = c.caps.empty() ? json::object() : json_arg(c.caps, "--caps");
  if (c.cap_n) caps["cap_n"] = *c.cap_n;
  if (c.cap_points) caps["cap_points"] = *c.cap_points;
  if (c.cap_cells) caps["cap_cells"] = *c.cap_cells;
  if (c.cap_gomory) caps["cap_gomory"] = *c.cap_gomory;
  if (c.cap_nodes) caps["cap_nodes"] = *c.cap_nodes;
  if (!caps.empty()) cmd["caps"] = caps;
}

struct InstanceOpts {
  std::string file;
  std::string kind;
  std::vector<std::string> params;
};

void add_instance(CLI::App* cmd, InstanceOpts& io, bool required = true) {
  auto* f = cmd->add_option("-i,--instance", io.file, "instance JSON file");
  auto* k = cmd->add_option("--kind", io.kind, "generate the instance instead (see `gen`)");
  cmd->add_option("--param", io.params, "generator parameter key=value (repeatable)");
  f->excludes(k);
  if (required) {
    // exactly one source; checked in apply_instance so --help stays usable
  }
}

json params_json(const std::vector<std::string>& params) {
  json p = json::object();
  for (const auto& kv : params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw CLI::ValidationError("--param expects key=value, got '" + kv + "'");
    p[kv.substr(0, eq)] = std::stol(kv.substr(eq + 1));
  }
  return p;
}

void apply_instance(json& cmd, const InstanceOpts& io, const CommonOpts& c, bool required) {
  if (!io.file.empty()) {
    cmd["instance"] = json_arg(io.file, "--instance");
  } else if (!io.kind.empty()) {
    json g{{"kind", io.kind}, {"seed", c.seed}};
    json p = params_json(io.params);
    if (!p.empty()) g["params"] = p;
    cmd["gen"] = g;
  } else if (required) {
    throw CLI::ValidationError("pass an instance with -i or generate one with --kind");
  }
}

// Runs the command document and emits the result. stdout carries the CSV
// report when the result has one, the result JSON otherwise; --out always
// receives the JSON document (or the CSV when the path ends in .csv).
int run_and_emit(const json& cmd, const CommonOpts& c, const char* stdout_field = nullptr) {
  int code = 0;
  char* res = cutlab_run(cmd.dump().c_str(), &code);
  if (!res) {
    std::fprintf(stderr, "error: %s\n", cutlab_last_error());
    return 2;
  }
  json doc = json::parse(res);
  cutlab_free(res);
  if (doc.contains("error")) {
    std::fprintf(stderr, "error (%s): %s\n",
                 doc["error"]["status"].get<std::string>().c_str(),
                 doc["error"]["message"].get<std::string>().c_str());
    return code;
  }
  std::string body;
  if (stdout_field && doc.contains(stdout_field) && doc[stdout_field].is_object())
    body = doc[stdout_field].dump(2) + "\n";
  else if (doc.contains("csv"))
    body = doc["csv"].get<std::string>();
  else
    body = doc.dump(2) + "\n";
  if (c.out.empty()) {
    std::fputs(body.c_str(), stdout);
  } else {
    std::ofstream out(c.out, std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "error: cannot write '%s'\n", c.out.c_str());
      return 2;
    }
    bool csv_file = c.out.size() > 4 && c.out.compare(c.out.size() - 4, 4, ".csv") == 0;
    if (csv_file && doc.contains("csv")) out << doc["csv"].get<std::string>();
    else if (stdout_field && doc.contains(stdout_field) && doc[stdout_field].is_object())
      out << doc[stdout_field].dump(2) << '\n';
    else out << doc.dump(2) << '\n';
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("cutlab ") + cutlab_version() +
               " — exact cut generation, scoring, and verification"};
  app.require_subcommand(1);
  int rc = 0;

  // gen ----------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("gen", "generate a deterministic instance");
    auto c = std::make_shared<CommonOpts>();
    auto kind = std::make_shared<std::string>();
    auto params = std::make_shared<std::vector<std::string>>();
    cmd->add_option("--kind", *kind,
                    "2ssp | market-split | random-equality | random-packing | "
                    "preprocessed-packing | sign-pattern | random-milp | pure-ip | covering | "
                    "partitioned-packing | cancel-family")
        ->required();
    cmd->add_option("--param", *params, "generator parameter key=value (repeatable)");
    add_common(cmd, *c);
    cmd->callback([&rc, c, kind, params] {
      json j{{"command", "gen"}, {"kind", *kind}, {"seed", c->seed}};
      json p = params_json(*params);
      if (!p.empty()) j["params"] = p;
      rc = run_and_emit(j, *c, "instance");
    });
  }

  // cuts ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("cuts", "run every applicable cut generator");
    auto c = std::make_shared<CommonOpts>();
    auto io = std::make_shared<InstanceOpts>();
    auto no_validate = std::make_shared<bool>(false);
    add_instance(cmd, *io);
    cmd->add_flag("--no-validate", *no_validate, "skip the exact validity oracle");
    add_common(cmd, *c);
    cmd->callback([&rc, c, io, no_validate] {
      json j{{"command", "cuts"}};
      apply_instance(j, *io, *c, true);
      apply_common(j, *c);
      if (*no_validate) j["validate"] = false;
      rc = run_and_emit(j, *c);
    });
  }

  // select -------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("select", "score and select cuts from a pool");
    auto c = std::make_shared<CommonOpts>();
    auto io = std::make_shared<InstanceOpts>();
    auto cuts = std::make_shared<std::string>();
    auto xstar = std::make_shared<std::string>();
    auto policy = std::make_shared<std::string>();
    auto w_objpar = std::make_shared<std::string>();
    add_instance(cmd, *io, false);
    cmd->add_option("--cuts", *cuts, "cut pool: JSON array file (or `cuts` output)")->required();
    cmd->add_option("--xstar", *xstar, "point to separate, comma-separated rationals");
    cmd->add_option("--policy", *policy, "selection policy JSON (inline or file)");
    cmd->add_option("--w-objpar", *w_objpar, "objective-parallelism weight (rational)");
    add_common(cmd, *c);
    cmd->callback([&rc, c, io, cuts, xstar, policy, w_objpar] {
      json j{{"command", "select"}};
      apply_instance(j, *io, *c, false);
      json pool = json_arg(*cuts, "--cuts");
      j["cuts"] = pool.is_object() && pool.contains("cuts") ? pool["cuts"] : pool;
      if (!xstar->empty()) j["xstar"] = vec_arg(*xstar);
      if (!policy->empty()) j["policy"] = json_arg(*policy, "--policy");
      if (!w_objpar->empty()) j["w_objpar"] = *w_objpar;
      apply_common(j, *c);
      rc = run_and_emit(j, *c);
    });
  }

  // gomory ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("gomory", "fractional rounding-cut loop to integer optimality");
    auto c = std::make_shared<CommonOpts>();
    auto io = std::make_shared<InstanceOpts>();
    auto sense = std::make_shared<std::string>("max");
    add_instance(cmd, *io);
    cmd->add_option("--sense", *sense, "max | min")->check(CLI::IsMember({"max", "min"}));
    add_common(cmd, *c);
    cmd->callback([&rc, c, io, sense] {
      json j{{"command", "gomory"}, {"sense", *sense}};
      apply_instance(j, *io, *c, true);
      apply_common(j, *c);
      rc = run_and_emit(j, *c);
    });
  }

  // sparsity -------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("sparsity", "sparse-approximation tools");
    cmd->require_subcommand(1);

    auto* dist = cmd->add_subcommand("dist", "exact max-distance to the k-sparse closure");
    {
      auto c = std::make_shared<CommonOpts>();
      auto k = std::make_shared<int>(1);
      auto poly = std::make_shared<std::string>();
      dist->add_option("--k", *k, "sparsity level")->required();
      dist->add_option("--polytope", *poly, "V-polytope JSON {dim, points} (default: fixture)");
      add_common(dist, *c);
      dist->callback([&rc, c, k, poly] {
        json j{{"command", "sparsity"}, {"op", "dist"}, {"k", *k}};
        if (poly->empty()) j["fixture"] = true;
        else j["polytope"] = json_arg(*poly, "--polytope");
        apply_common(j, *c);
        rc = run_and_emit(j, *c);
      });
    }

    auto* bound = cmd->add_subcommand("bound", "certified distance-bound enclosure");
    {
      auto c = std::make_shared<CommonOpts>();
      auto n = std::make_shared<int>(), k = std::make_shared<int>(), t = std::make_shared<int>();
      bound->add_option("--n", *n, "dimension")->required();
      bound->add_option("--k", *k, "sparsity level")->required();
      bound->add_option("--t", *t, "number of generating points")->required();
      add_common(bound, *c, false);
      bound->callback([&rc, c, n, k, t] {
        json j{{"command", "sparsity"}, {"op", "bound"}, {"n", *n}, {"k", *k}, {"t", *t}};
        apply_common(j, *c);
        rc = run_and_emit(j, *c);
      });
    }

    auto* sp = cmd->add_subcommand("sparsify", "randomized cut sparsification");
    {
      auto c = std::make_shared<CommonOpts>();
      auto spec = std::make_shared<int>(-1);
      auto poly = std::make_shared<std::string>();
      auto u = std::make_shared<std::string>();
      auto k = std::make_shared<int>(0);
      auto draws = std::make_shared<int>(1000);
      sp->add_option("--spec-index", *spec, "built-in input family index (with --seed)");
      sp->add_option("--polytope", *poly, "V-polytope JSON file");
      sp->add_option("--u", *u, "point to separate, comma-separated rationals");
      sp->add_option("--k", *k, "target sparsity");
      sp->add_option("--max-draws", *draws, "sampling rounds before giving up");
      add_common(sp, *c);
      sp->callback([&rc, c, spec, poly, u, k, draws] {
        json j{{"command", "sparsity"}, {"op", "sparsify"}, {"max_draws", *draws}};
        if (*spec >= 0) {
          j["spec_index"] = *spec;
        } else {
          if (poly->empty() || u->empty() || *k <= 0)
            throw CLI::ValidationError("sparsify needs --spec-index or --polytope/--u/--k");
          j["polytope"] = json_arg(*poly, "--polytope");
          j["u"] = vec_arg(*u);
          j["k"] = *k;
        }
        apply_common(j, *c);
        rc = run_and_emit(j, *c);
      });
    }
  }

  // blocks ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("blocks", "block-structure tools");
    cmd->require_subcommand(1);
    const char* ops[3] = {"graph", "chromatic", "eta"};
    const char* help[3] = {"block interaction graph", "exact fractional chromatic number",
                           "verify z_sparse <= eta * z_I over objectives"};
    for (int oi = 0; oi < 3; ++oi) {
      auto* sub = cmd->add_subcommand(ops[oi], help[oi]);
      auto c = std::make_shared<CommonOpts>();
      auto io = std::make_shared<InstanceOpts>();
      auto blocks = std::make_shared<std::string>();
      auto eta = std::make_shared<std::string>();
      auto objectives = std::make_shared<std::vector<std::string>>();
      add_instance(sub, *io);
      sub->add_option("--blocks", *blocks, "variable partition \"0,1;2,3\" (default: instance tag)");
      if (std::string(ops[oi]) == "eta") {
        sub->add_option("--eta", *eta, "factor to verify (default: fractional chromatic number)");
        sub->add_option("--objective", *objectives, "objective, comma-separated (repeatable)");
      }
      add_common(sub, *c);
      std::string op = ops[oi];
      sub->callback([&rc, c, io, blocks, eta, objectives, op] {
        json j{{"command", "blocks"}, {"op", op}};
        apply_instance(j, *io, *c, true);
        if (!blocks->empty()) j["blocks"] = *blocks;
        if (!eta->empty()) j["eta"] = *eta;
        if (!objectives->empty()) {
          json arr = json::array();
          for (const auto& o : *objectives) arr.push_back(vec_arg(o));
          j["objectives"] = arr;
        }
        apply_common(j, *c);
        rc = run_and_emit(j, *c);
      });
    }
  }

  // agg ------------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("agg", "aggregation-closure tools");
    cmd->require_subcommand(1);

    auto* cl = cmd->add_subcommand("closure", "outer aggregation closure (or exact 1-row closure)");
    {
      auto c = std::make_shared<CommonOpts>();
      auto io = std::make_shared<InstanceOpts>();
      auto budget = std::make_shared<int>(0);
      auto one_row = std::make_shared<bool>(false);
      auto objective = std::make_shared<std::string>();
      add_instance(cl, *io);
      cl->add_option("--budget", *budget, "random multipliers on top of the unit ones");
      cl->add_flag("--one-row", *one_row, "exact 1-row closure instead");
      cl->add_option("--objective", *objective, "value objective (default: the instance's)");
      add_common(cl, *c);
      cl->callback([&rc, c, io, budget, one_row, objective] {
        json j{{"command", "agg"}, {"op", "closure"}, {"budget", *budget}};
        apply_instance(j, *io, *c, true);
        if (*one_row) j["one_row"] = true;
        if (!objective->empty()) j["objective"] = vec_arg(*objective);
        apply_common(j, *c);
        rc = run_and_emit(j, *c);
      });
    }

    const char* ops[2] = {"thm4", "signpat"};
    const char* help[2] = {"packing factor-two and sandwich checks",
                           "sign-pattern factor-two check"};
    for (int oi = 0; oi < 2; ++oi) {
      auto* sub = cmd->add_subcommand(ops[oi], help[oi]);
      auto c = std::make_shared<CommonOpts>();
      auto io = std::make_shared<InstanceOpts>();
      auto budget = std::make_shared<int>(6);
      auto objectives = std::make_shared<std::vector<std::string>>();
      add_instance(sub, *io);
      sub->add_option("--budget", *budget, "random multipliers on top of the unit ones");
      sub->add_option("--objective", *objectives, "objective, comma-separated (repeatable)");
      add_common(sub, *c);
      std::string op = ops[oi];
      sub->callback([&rc, c, io, budget, objectives, op] {
        json j{{"command", "agg"}, {"op", op}, {"budget", *budget}};
        apply_instance(j, *io, *c, true);
        if (!objectives->empty()) {
          json arr = json::array();
          for (const auto& o : *objectives) arr.push_back(vec_arg(o));
          j["objectives"] = arr;
        }
        apply_common(j, *c);
        rc = run_and_emit(j, *c);
      });
    }

    auto* cg = cmd->add_subcommand("cgcompare", "1-row vs aggregated CG gap closed");
    {
      auto c = std::make_shared<CommonOpts>();
      auto io = std::make_shared<InstanceOpts>();
      auto budget = std::make_shared<int>(60);
      add_instance(cg, *io, false);
      cg->add_option("--budget", *budget, "aggregations to try (ladder first, then random)");
      add_common(cg, *c);
      cg->callback([&rc, c, io, budget] {
        json j{{"command", "agg"}, {"op", "cgcompare"}, {"budget", *budget}};
        apply_instance(j, *io, *c, false);  // default: a market-split instance from --seed
        apply_common(j, *c);
        rc = run_and_emit(j, *c);
      });
    }
  }

  // verify-all -------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("verify-all", "full verification suite (ten criteria + extras)");
    auto c = std::make_shared<CommonOpts>();
    add_common(cmd, *c);
    cmd->callback([&rc, c] {
      json j{{"command", "verify-all"}};
      apply_common(j, *c);
      int code = 0;
      char* res = cutlab_run(j.dump().c_str(), &code);
      if (!res) {
        std::fprintf(stderr, "error: %s\n", cutlab_last_error());
        rc = 2;
        return;
      }
      json doc = json::parse(res);
      cutlab_free(res);
      if (doc.contains("error")) {
        std::fprintf(stderr, "error (%s): %s\n",
                     doc["error"]["status"].get<std::string>().c_str(),
                     doc["error"]["message"].get<std::string>().c_str());
        rc = code;
        return;
      }
      for (const auto& cr : doc["criteria"])
        std::fprintf(stderr, "[%s] %2d %s :: %s\n", cr["pass"].get<bool>() ? "PASS" : "FAIL",
                     cr["id"].get<int>(), cr["name"].get<std::string>().c_str(),
                     cr["summary"].get<std::string>().c_str());
      for (const auto& cr : doc["extra"])
        std::fprintf(stderr, "[%s]  + %s :: %s\n", cr["pass"].get<bool>() ? "PASS" : "FAIL",
                     cr["name"].get<std::string>().c_str(),
                     cr["summary"].get<std::string>().c_str());
      std::fprintf(stderr, "%s\n", doc["all_pass"].get<bool>() ? "ALL CRITERIA PASS"
                                                               : "CRITERIA FAILED");
      if (!c->out.empty()) {
        std::ofstream out(c->out, std::ios::binary);
        if (!out) {
          std::fprintf(stderr, "error: cannot write '%s'\n", c->out.c_str());
          rc = 2;
          return;
        }
        out << doc.dump(2) << '\n';
      } else {
        std::fputs((doc.dump(2) + "\n").c_str(), stdout);
      }
      rc = code;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; every real usage problem exits 2.
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return rc;
}
