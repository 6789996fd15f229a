#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "cyclechain/classifier.hpp"
#include "cyclechain/families.hpp"
#include "cyclechain/report_io.hpp"
#include "cyclechain/solver.hpp"
#include "cyclechain/verifier.hpp"
#include "schema_check.hpp"

using namespace cyclechain;
using nlohmann::json;

namespace {

json load_schema(const std::string& name) {
  std::ifstream in(std::string(CYCLECHAIN_SCHEMA_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "schema file missing: " << name);
  return json::parse(in);
}

int count_char(const std::string& s, char c) {
  int k = 0;
  for (char ch : s)
    if (ch == c) ++k;
  return k;
}

}  // namespace

TEST_CASE("compute report JSON") {
  ParameterReport r = compute_all(make_double_star(3));
  std::string text = report_to_json(r);
  CHECK(text == report_to_json(r));  // byte-identical on repeat
  CHECK(text.back() == '\n');

  json doc = json::parse(text);
  CHECK(schema_check::validate(load_schema("compute.schema.json"), doc) == "");

  CHECK(doc["label"] == "double_star(3)");
  CHECK(doc["n"] == 5);
  CHECK(doc["parameters"]["beta_odd"] == 4);
  CHECK(doc["parameters"]["i_odd"] == 2);
  CHECK(doc["parameters"]["gamma_cy"] == 2);
  CHECK(doc["invariants"]["girth"] == 3);
  CHECK(doc["invariants"]["chi"] == 3);
  CHECK(doc["parameters"].size() == 12);
  CHECK(doc["witnesses"].size() == 12);
  CHECK(doc["invariants"].size() == 11);

  for (const auto& [key, w] : doc["witnesses"].items()) {
    CAPTURE(key);
    REQUIRE(w.is_array());
    CHECK(static_cast<int>(w.size()) == doc["parameters"][key].get<int>());
    for (std::size_t i = 1; i < w.size(); ++i) CHECK(w[i - 1].get<int>() < w[i].get<int>());
  }
}

TEST_CASE("verify document JSON") {
  Graph g = make_cycle(5);
  SubsetClassifier c = SubsetClassifier::build(g);
  ParameterReport r = compute_all(g, c);
  FamilyFlags flags;
  flags.planar = true;
  flags.maximal_outerplanar = true;
  auto rows = verify_all({g, flags, r, c});

  std::string text = verify_to_json(r.graph6, r.label, flags, rows);
  json doc = json::parse(text);
  CHECK(schema_check::validate(load_schema("verify.schema.json"), doc) == "");

  CHECK(doc["flags"] == json::array({"planar", "maximal_outerplanar"}));
  CHECK(doc["checks"].size() == check_names().size());
  CHECK(doc["summary"]["fails"] == 1);
  CHECK(doc["summary"]["holds"].get<int>() + doc["summary"]["fails"].get<int>() +
            doc["summary"]["not_applicable"].get<int>() ==
        static_cast<int>(check_names().size()));

  bool saw_counterexample = false;
  for (const auto& ch : doc["checks"]) {
    CHECK(ch["check"].is_string());
    if (ch["status"] == "fails") {
      REQUIRE(ch.contains("counterexample"));
      CHECK(ch["counterexample"]["graph6"] == doc["graph6"]);
      saw_counterexample = true;
    }
  }
  CHECK(saw_counterexample);
}

TEST_CASE("check JSON and CSV") {
  CheckResult c;
  c.check = "two_tuple";
  c.status = CheckStatus::fails;
  c.lhs = 3;
  c.rhs = 2;
  c.values = {{"gamma2", 3}, {"gamma_cy", 2}};
  c.note = "say \"hi\", ok";
  CheckCounterexample ce;
  ce.graph6 = "Bw";
  ce.sets["gamma2_set"] = {0, 1};
  c.counterexample = ce;

  json doc = json::parse(check_to_json("Bw", "tri", c));
  CHECK(doc["check"] == "two_tuple");
  CHECK(doc["status"] == "fails");
  CHECK(doc["lhs"] == 3);
  CHECK(doc["values"]["gamma2"] == 3);
  CHECK(doc["counterexample"]["sets"]["gamma2_set"] == json::array({0, 1}));

  CHECK(check_csv_header() == "graph6,label,check,status,lhs,rhs,values,note\n");
  std::string row = check_to_csv("Bw", "tri,angle", c);
  CHECK(row ==
        "Bw,\"tri,angle\",two_tuple,fails,3,2,gamma2=3;gamma_cy=2,\"say \"\"hi\"\", ok\"\n");
}

TEST_CASE("report CSV") {
  std::string header = report_csv_header();
  CHECK(header.rfind("graph6,label,n,ir_cy,", 0) == 0);
  CHECK(count_char(header, ',') == 25);  // 26 columns

  ParameterReport r = compute_all(make_cycle(3));
  std::string row = report_to_csv(r);
  CHECK(count_char(row, ',') == 25);
  CHECK(row.rfind("Bw,cycle(3),3,2,2,2,2,2,2,2,2,2,2,2,2,3,0,0,1,1,3,2,", 0) == 0);
}

TEST_CASE("sweep summary JSON and CSV") {
  SweepSummary s;
  s.seed = 7;
  s.cap = 20;
  s.graph_count = 3;
  s.sources = {"all_labeled(n=3)"};
  s.tallies["cy_chain"] = {3, 0, 0};
  s.tallies["odd_strict"] = {1, 1, 1};
  s.failures.push_back({2, "Bw", "odd_strict"});

  std::string text = summary_to_json(s);
  json doc = json::parse(text);
  CHECK(schema_check::validate(load_schema("sweep.schema.json"), doc) == "");
  CHECK(doc["seed"] == 7);
  CHECK(doc["tallies"]["odd_strict"]["fails"] == 1);
  CHECK(doc["failures"][0]["index"] == 2);
  CHECK(text == summary_to_json(s));

  CHECK(summary_to_csv(s) ==
        "check,holds,fails,not_applicable\ncy_chain,3,0,0\nodd_strict,1,1,1\n");
}

TEST_CASE("corpus entry JSON") {
  CheckResult c;
  c.check = "odd_strict";
  c.status = CheckStatus::fails;
  c.lhs = 4;
  c.rhs = 4;
  CheckCounterexample ce;
  ce.graph6 = "DqK";
  ce.sets["i_odd_witness"] = {0, 1, 2, 3};
  c.counterexample = ce;
  FamilyFlags flags;
  flags.maximal_outerplanar = true;

  json doc = json::parse(corpus_entry_json("DqK", "cycle(5)", flags, c));
  CHECK(doc["graph6"] == "DqK");
  CHECK(doc["label"] == "cycle(5)");
  CHECK(doc["flags"] == json::array({"maximal_outerplanar"}));
  CHECK(doc["check"]["check"] == "odd_strict");
  CHECK(doc["check"]["counterexample"]["sets"]["i_odd_witness"].size() == 4);
}
