#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "cyclechain/classifier.hpp"
#include "cyclechain/errors.hpp"
#include "cyclechain/families.hpp"
#include "cyclechain/graph.hpp"
#include "cyclechain/graph_io.hpp"
#include "cyclechain/solver.hpp"
#include "cyclechain/verifier.hpp"

using namespace cyclechain;

namespace {

struct Setup {
  Graph g;
  SubsetClassifier c;
  ParameterReport r;

  explicit Setup(Graph graph) : g(std::move(graph)), c(SubsetClassifier::build(g)), r(compute_all(g, c)) {}

  VerifyInput input(FamilyFlags flags = {}) const { return {g, flags, r, c}; }
};

std::map<std::string, CheckResult> by_name(const std::vector<CheckResult>& rows) {
  std::map<std::string, CheckResult> out;
  for (const auto& r : rows) out[r.check] = r;
  return out;
}

Graph two_triangles() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

}  // namespace

TEST_CASE("check registry") {
  const std::vector<std::string> want = {
      "easy_bounds_cycle", "indep_char",      "cy_dom_char",    "cy_ir_char",
      "odd_strict",        "odd_indep_bound1", "odd_indep_bound2", "mop_beta",
      "kral_voss",         "two_tuple",       "cy_dom_bound",   "cy_chain",
      "odd_chain",         "lemma_cy2",       "lemma_indep_dom", "lemma_dom_irr",
      "gamma_odd_upper",   "gamma_odd_lower", "cy_ir_bound",    "ir_odd_bound",
      "decycling_id",      "cover_id",        "t_bound",
  };
  CHECK(check_names() == want);
  CHECK(is_check_name("kral_voss"));
  CHECK(!is_check_name("kral-voss"));
  CHECK(status_name(CheckStatus::holds) == "holds");
  CHECK(status_name(CheckStatus::fails) == "fails");
  CHECK(status_name(CheckStatus::not_applicable) == "not_applicable");

  Setup s(make_cycle(3));
  CHECK_THROWS_AS(run_check("nope", s.input()), input_error);
  CHECK_THROWS_AS(verify_all(s.input(), {"easy_bounds_cycle", "nope"}), input_error);
}

TEST_CASE("triangle passes every applicable check") {
  Setup s(make_cycle(3));
  FamilySpec spec;
  spec.family = Family::cycle;
  spec.n = 3;
  auto rows = verify_all(s.input(family_flags(spec)));
  REQUIRE(rows.size() == check_names().size());
  auto m = by_name(rows);
  for (const auto& [name, r] : m) {
    CAPTURE(name);
    if (name == "odd_strict" || name == "mop_beta") {
      CHECK(r.status == CheckStatus::not_applicable);
      CHECK(r.note == "not flagged maximal outerplanar");
    } else {
      CHECK(r.status == CheckStatus::holds);
      CHECK(!r.counterexample.has_value());
    }
  }

  CHECK(m["lemma_cy2"].values.at("maximal_independent_sets") == 3);
  CHECK(m["lemma_indep_dom"].values.at("maximal_independent_sets") == 3);
  CHECK(m["lemma_dom_irr"].values.at("minimal_dominating_sets") == 3);
  CHECK(m["two_tuple"].lhs == 2);
  CHECK(m["two_tuple"].rhs == 2);

  // the uncorrected reading asks for ir_odd = n here and is refuted
  const CheckResult& ir = m["ir_odd_bound"];
  CHECK(ir.status == CheckStatus::holds);
  CHECK(ir.values.at("bipartite") == 0);
  CHECK(ir.values.at("uncorrected_holds") == 0);
  CHECK(ir.values.at("ir_odd") == 2);
  CHECK(ir.note.find("fails on this graph") != std::string::npos);
}

TEST_CASE("edgeless graph routes through the degenerate branches") {
  Setup s(make_all_labeled(3, 0));
  auto m = by_name(verify_all(s.input()));

  CHECK(m["easy_bounds_cycle"].status == CheckStatus::holds);
  CHECK(m["indep_char"].status == CheckStatus::not_applicable);
  CHECK(m["indep_char"].note == "graph is acyclic");

  CHECK(m["odd_indep_bound2"].status == CheckStatus::not_applicable);
  CHECK(m["odd_indep_bound2"].note == "fewer than two color classes");
  CHECK(m["gamma_odd_upper"].status == CheckStatus::not_applicable);
  CHECK(m["gamma_odd_upper"].note == "fewer than two color classes");

  const CheckResult& lower = m["gamma_odd_lower"];
  CHECK(lower.status == CheckStatus::holds);
  CHECK(lower.note == "bipartite case: gamma_odd equals the order");
  CHECK(lower.values.at("gamma_odd") == 3);

  const CheckResult& ir = m["ir_odd_bound"];
  CHECK(ir.status == CheckStatus::holds);
  CHECK(ir.values.at("bipartite") == 1);
  CHECK(ir.values.at("uncorrected_holds") == 1);

  CHECK(m["kral_voss"].status == CheckStatus::holds);
  CHECK(m["kral_voss"].note == "planar lower bound skipped (not flagged planar)");
}

TEST_CASE("a five-cycle flagged maximal outerplanar refutes odd_strict") {
  Setup s(make_cycle(5));
  FamilyFlags flags;
  flags.planar = true;
  flags.maximal_outerplanar = true;
  auto rows = verify_all(s.input(flags));
  auto m = by_name(rows);

  const CheckResult& strict = m["odd_strict"];
  CHECK(strict.status == CheckStatus::fails);
  CHECK(strict.lhs == 4);
  CHECK(strict.rhs == 4);
  REQUIRE(strict.counterexample.has_value());
  CHECK(strict.counterexample->graph6 == to_graph6(s.g));
  CHECK(strict.counterexample->sets.count("i_odd_witness") == 1);
  CHECK(strict.counterexample->sets.count("beta_odd_witness") == 1);

  CHECK(m["mop_beta"].status == CheckStatus::holds);
  CHECK(m["kral_voss"].status == CheckStatus::holds);

  int fails = 0;
  for (const auto& r : rows)
    if (r.status == CheckStatus::fails) ++fails;
  CHECK(fails == 1);
}

TEST_CASE("two disjoint triangles pin the upper odd domination number") {
  Setup s(two_triangles());
  auto m = by_name(verify_all(s.input()));
  const CheckResult& up = m["gamma_odd_upper"];
  CHECK(up.status == CheckStatus::holds);
  CHECK(up.lhs == 4);
  CHECK(up.rhs == 4);
  CHECK(up.values.at("Gamma_odd") == 4);

  // equality with girth - 1 fails here exactly as the structure test does
  const CheckResult& ic = m["indep_char"];
  CHECK(ic.status == CheckStatus::holds);
  CHECK(ic.values.at("path_structure") == 0);
  CHECK(ic.values.at("i_cy") == 4);
}

TEST_CASE("path_structure") {
  CHECK(path_structure(make_cycle(6), 6));
  CHECK(path_structure(make_cycle(5), 5));
  CHECK(path_structure(make_complete(4), 3));
  CHECK(!path_structure(two_triangles(), 3));
  CHECK(!path_structure(make_sun(), 3));
  CHECK(path_structure(make_subdivided_double_star(3, 1, 0), 4));
  CHECK(!path_structure(make_subdivided_double_star(3, 2, 0), 4));
  CHECK(path_structure(make_path(0), 1));
  CHECK(!path_structure(make_path(3), 1));
  CHECK(!path_structure(make_path(2), 4));  // wanted path longer than the graph
}

TEST_CASE("verify_all honors the requested subset in registry order") {
  Setup s(make_cycle(4));
  auto rows = verify_all(s.input(), {"t_bound", "easy_bounds_cycle"});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].check == "easy_bounds_cycle");
  CHECK(rows[1].check == "t_bound");
}
