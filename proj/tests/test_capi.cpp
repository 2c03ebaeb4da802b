#include "cutlab/cutlab.h"

#include <doctest.h>

#include <json.hpp>

#include <cstring>
#include <string>

using nlohmann::json;

namespace {

// Runs a command document through the C ABI and parses the result.
json run(const json& cmd, int& code) {
  char* res = cutlab_run(cmd.dump().c_str(), &code);
  REQUIRE(res != nullptr);
  json doc = json::parse(res);
  cutlab_free(res);
  return doc;
}

}  // namespace

TEST_CASE("version is exposed both directly and as a command") {
  std::string v = cutlab_version();
  CHECK(!v.empty());
  int code = -1;
  json doc = run({{"command", "version"}}, code);
  CHECK(code == 0);
  CHECK(doc["version"] == v);
}

TEST_CASE("instance handles round trip through the C ABI") {
  cutlab_instance* inst = cutlab_generate("pure-ip", "{\"n\": 3, \"m\": 2}", 5);
  REQUIRE(inst != nullptr);
  char* text = cutlab_instance_json(inst);
  REQUIRE(text != nullptr);
  cutlab_instance* back = cutlab_instance_parse(text);
  REQUIRE(back != nullptr);
  char* text2 = cutlab_instance_json(back);
  REQUIRE(text2 != nullptr);
  CHECK(std::strcmp(text, text2) == 0);

  char* tags = cutlab_classify(inst);
  REQUIRE(tags != nullptr);
  json t = json::parse(tags);
  CHECK(t.is_array());
  CHECK(std::count(t.begin(), t.end(), json("pure-integer")) == 1);

  cutlab_free(tags);
  cutlab_free(text);
  cutlab_free(text2);
  cutlab_instance_free(inst);
  cutlab_instance_free(back);
  cutlab_free(nullptr);  // explicit no-op
}

TEST_CASE("parse failures return null and set the thread error") {
  cutlab_instance* bad = cutlab_instance_parse("{\"nope\": 1}");
  CHECK(bad == nullptr);
  CHECK(std::strlen(cutlab_last_error()) > 0);
  cutlab_instance* ok = cutlab_generate("pure-ip", "", 1);
  REQUIRE(ok != nullptr);
  CHECK(std::strlen(cutlab_last_error()) == 0);  // success clears it
  cutlab_instance_free(ok);

  CHECK(cutlab_generate("no-such-kind", "", 1) == nullptr);
  CHECK(std::strlen(cutlab_last_error()) > 0);
}

TEST_CASE("gomory through the C ABI solves a generated instance") {
  cutlab_instance* inst = cutlab_generate("pure-ip", "{\"n\": 2, \"m\": 2}", 3);
  REQUIRE(inst != nullptr);
  char* rep = cutlab_gomory(inst, "");
  REQUIRE(rep != nullptr);
  json doc = json::parse(rep);
  CHECK((doc["status"] == "optimal" || doc["status"] == "cap_hit"));
  if (doc["status"] == "optimal") {
    CHECK(doc.contains("optimum"));
    CHECK(doc["solution"].is_array());
  }
  cutlab_free(rep);
  cutlab_instance_free(inst);
}

TEST_CASE("run dispatches commands with spec exit codes") {
  int code = -1;
  json doc = run({{"command", "no-such"}}, code);
  CHECK(code == 2);
  CHECK(doc.contains("error"));

  doc = run(json::parse("{\"command\": \"gen\", \"kind\": \"2ssp\", \"seed\": 7}"), code);
  CHECK(code == 0);
  REQUIRE(doc.contains("instance"));
  CHECK(doc["instance"]["name"] == "2ssp-k2-s7");

  // determinism through the boundary
  int code2 = -1;
  json doc2 = run(json::parse("{\"command\": \"gen\", \"kind\": \"2ssp\", \"seed\": 7}"), code2);
  CHECK(doc == doc2);

  // malformed document: parse error, exit 2
  char* res = cutlab_run("{\"command\": ", &code);
  REQUIRE(res != nullptr);
  CHECK(code == 2);
  cutlab_free(res);
}

TEST_CASE("sparsity fixture through the command runner") {
  int code = -1;
  json doc = run({{"command", "sparsity"}, {"op", "dist"}, {"fixture", true}, {"k", 1}}, code);
  CHECK(code == 0);
  CHECK(doc["sq_dist"] == "1/2");
  CHECK(doc["pass"] == true);
  CHECK(doc["csv"].get<std::string>().find(",1/2,") != std::string::npos);
  // the report embeds its reproduction recipe
  CHECK(doc["csv"].get<std::string>().find("# artifact: cutlab") != std::string::npos);
  CHECK(doc["csv"].get<std::string>().find("# seed:") != std::string::npos);
}

TEST_CASE("blocks and cuts commands compose via generated instances") {
  int code = -1;
  json cmd{{"command", "blocks"},
           {"op", "chromatic"},
           {"gen", {{"kind", "2ssp"}, {"seed", 3}, {"params", {{"k", 2}, {"size", 2}}}}}};
  json doc = run(cmd, code);
  CHECK(code == 0);
  CHECK(doc["chi_f"] == "2");  // star interaction graph
  CHECK(doc["q"] == 3);

  json cuts{{"command", "cuts"}, {"gen", {{"kind", "pure-ip"}, {"seed", 5}}}};
  doc = run(cuts, code);
  CHECK(code == 0);
  CHECK(doc["invalid"] == 0);
  CHECK(doc["count"].get<int>() >= 1);
  CHECK(doc["validated"] == true);

  // select over the produced cuts, separating a point all cuts cut off
  json sel{{"command", "select"},
           {"cuts", doc["cuts"]},
           {"xstar", json::array({"100", "100", "100"})},
           {"policy", {{"k_max", 2}}}};
  json sdoc = run(sel, code);
  CHECK(code == 0);
  CHECK(sdoc["selected"].size() <= 2);
}

TEST_CASE("caps propagate through command documents") {
  int code = -1;
  json cmd{{"command", "gomory"},
           {"gen", {{"kind", "pure-ip"}, {"seed", 11}, {"params", {{"n", 3}, {"m", 3}}}}},
           {"caps", {{"cap_gomory", 1}}}};
  json doc = run(cmd, code);
  CHECK(code == 0);
  // one round is rarely enough: either it finished in one LP or it reports the cap
  CHECK((doc["status"] == "optimal" || doc["status"] == "cap_hit"));
  CHECK(doc["iterations"].get<int>() <= 1);

  // nonsense cap keys are a parse error, exit 2
  json bad{{"command", "gomory"},
           {"gen", {{"kind", "pure-ip"}, {"seed", 11}}},
           {"caps", {{"bogus_cap", 1}}}};
  doc = run(bad, code);
  CHECK(code == 2);
  CHECK(doc.contains("error"));
}
