#include "cyclechain/verifier.hpp"

#include <algorithm>
#include <initializer_list>
#include <utility>

#include "cyclechain/errors.hpp"
#include "cyclechain/graph_io.hpp"

namespace cyclechain {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::fails: return "fails";
    case CheckStatus::not_applicable: return "not_applicable";
  }
  return "unknown";
}

bool path_structure(const Graph& g, int g_girth) {
  const int k = g_girth - 1;
  const int n = g.vertex_count();
  if (k <= 0) return n == 0;
  if (k > n) return false;
  std::vector<int> path;
  auto off_ok = [&](VertexSet mask) {
    const VertexSet ends = vertex_bit(path.front()) | vertex_bit(path.back());
    for (int v : bits_of(g.vertices() & ~mask))
      if ((g.neighbors(v) & mask) != ends) return false;
    return true;
  };
  auto dfs = [&](auto&& self, VertexSet mask) -> bool {
    if (static_cast<int>(path.size()) == k) {
      if (path.front() > path.back()) return false;  // each path found once
      return off_ok(mask);
    }
    for (int x : bits_of(g.neighbors(path.back()) & ~mask)) {
      if ((g.neighbors(x) & mask) != vertex_bit(path.back())) continue;  // induced
      path.push_back(x);
      if (self(self, mask | vertex_bit(x))) return true;
      path.pop_back();
    }
    return false;
  };
  for (int v = 0; v < n; ++v) {
    path.assign(1, v);
    if (dfs(dfs, vertex_bit(v))) return true;
  }
  return false;
}

namespace {

CheckResult base(const char* name) {
  CheckResult r;
  r.check = name;
  return r;
}

void attach(CheckResult& r, const VerifyInput& in,
            std::initializer_list<std::pair<const char*, VertexSet>> sets) {
  CheckCounterexample ce;
  ce.graph6 = to_graph6(in.graph);
  for (const auto& [key, s] : sets) ce.sets[key] = set_to_vertices(s);
  r.counterexample = std::move(ce);
}

CheckResult check_easy_bounds_cycle(const VerifyInput& in) {
  auto r = base("easy_bounds_cycle");
  const auto& inv = in.report.invariants;
  const int n = in.graph.vertex_count();
  const auto& i_cy = in.report.cycle.independence_lower;
  const auto& beta_cy = in.report.cycle.independence_upper;
  r.lhs = inv.girth - 1 + inv.kappa;
  r.rhs = n - inv.tau;
  r.values = {{"girth", inv.girth}, {"kappa", inv.kappa},     {"i_cy", i_cy.value},
              {"beta_cy", beta_cy.value}, {"n", n}, {"tau", inv.tau}};
  const bool ok = r.lhs <= i_cy.value && i_cy.value <= beta_cy.value && beta_cy.value <= r.rhs;
  r.status = ok ? CheckStatus::holds : CheckStatus::fails;
  if (!ok)
    attach(r, in, {{"i_cy_witness", i_cy.witness}, {"beta_cy_witness", beta_cy.witness}});
  return r;
}

CheckResult characterization(const char* name, const VerifyInput& in, const ParameterValue& pv,
                             const char* value_key) {
  auto r = base(name);
  const auto& inv = in.report.invariants;
  if (inv.girth < 3) {
    r.note = "graph is acyclic";
    return r;
  }
  if (inv.kappa > 0) {
    r.note = "some vertices lie on no cycle";
    r.values = {{"kappa", inv.kappa}};
    return r;
  }
  const bool ps = path_structure(in.graph, inv.girth);
  r.lhs = pv.value;
  r.rhs = inv.girth - 1;
  r.values = {{value_key, pv.value}, {"girth", inv.girth}, {"path_structure", ps ? 1 : 0}};
  const bool ok = (pv.value == inv.girth - 1) == ps;
  r.status = ok ? CheckStatus::holds : CheckStatus::fails;
  if (!ok) attach(r, in, {{"witness", pv.witness}});
  return r;
}

CheckResult check_indep_char(const VerifyInput& in) {
  return characterization("indep_char", in, in.report.cycle.independence_lower, "i_cy");
}

CheckResult check_cy_dom_char(const VerifyInput& in) {
  return characterization("cy_dom_char", in, in.report.cycle.domination_lower, "gamma_cy");
}

CheckResult check_cy_ir_char(const VerifyInput& in) {
  return characterization("cy_ir_char", in, in.report.cycle.irredundance_lower, "ir_cy");
}

CheckResult check_odd_strict(const VerifyInput& in) {
  auto r = base("odd_strict");
  if (!in.flags.maximal_outerplanar) {
    r.note = "not flagged maximal outerplanar";
    return r;
  }
  const auto& inv = in.report.invariants;
  const int n = in.graph.vertex_count();
  if (inv.chi != 3) {
    r.note = "chromatic number is not 3";
    r.values = {{"chi", inv.chi}};
    return r;
  }
  if (n % 3 == 0) {
    r.note = "order divisible by 3";
    r.values = {{"n", n}};
    return r;
  }
  const auto& i_odd = in.report.odd.independence_lower;
  const auto& beta_odd = in.report.odd.independence_upper;
  r.lhs = i_odd.value;
  r.rhs = beta_odd.value;
  r.values = {{"i_odd", i_odd.value}, {"beta_odd", beta_odd.value}, {"chi", inv.chi}, {"n", n}};
  r.status = i_odd.value < beta_odd.value ? CheckStatus::holds : CheckStatus::fails;
  if (r.status == CheckStatus::fails)
    attach(r, in,
           {{"i_odd_witness", i_odd.witness}, {"beta_odd_witness", beta_odd.witness}});
  return r;
}

CheckResult check_odd_indep_bound1(const VerifyInput& in) {
  auto r = base("odd_indep_bound1");
  const auto& inv = in.report.invariants;
  const int n = in.graph.vertex_count();
  const auto& i_odd = in.report.odd.independence_lower;
  const bool bipartite = inv.chi <= 2;
  if (bipartite) {
    r.lhs = i_odd.value;
    r.rhs = n;
    r.values = {{"i_odd", i_odd.value}, {"n", n}, {"bipartite", 1}};
    r.note = "bipartite case: i_odd equals the order";
    r.status = i_odd.value == n ? CheckStatus::holds : CheckStatus::fails;
  } else {
    r.lhs = inv.girth - 1 + inv.kappa_odd;
    r.rhs = n - inv.tau_odd;
    r.values = {{"i_odd", i_odd.value}, {"girth", inv.girth},   {"kappa_odd", inv.kappa_odd},
                {"n", n},               {"tau_odd", inv.tau_odd}, {"bipartite", 0}};
    const bool ok = r.lhs <= i_odd.value && i_odd.value <= r.rhs;
    r.status = ok ? CheckStatus::holds : CheckStatus::fails;
  }
  if (r.status == CheckStatus::fails) attach(r, in, {{"i_odd_witness", i_odd.witness}});
  return r;
}

CheckResult check_odd_indep_bound2(const VerifyInput& in) {
  auto r = base("odd_indep_bound2");
  const auto& inv = in.report.invariants;
  if (inv.chi < 2) {
    r.note = "fewer than two color classes";
    r.values = {{"chi", inv.chi}};
    return r;
  }
  const int n = in.graph.vertex_count();
  const auto& beta_odd = in.report.odd.independence_upper;
  r.lhs = 2 * (n / inv.chi);
  r.rhs = n - inv.tau_odd;
  r.values = {{"beta_odd", beta_odd.value}, {"chi", inv.chi}, {"n", n}, {"tau_odd", inv.tau_odd}};
  const bool ok = r.lhs <= beta_odd.value && beta_odd.value <= r.rhs;
  r.status = ok ? CheckStatus::holds : CheckStatus::fails;
  if (!ok) attach(r, in, {{"beta_odd_witness", beta_odd.witness}});
  return r;
}

CheckResult check_mop_beta(const VerifyInput& in) {
  auto r = base("mop_beta");
  if (!in.flags.maximal_outerplanar) {
    r.note = "not flagged maximal outerplanar";
    return r;
  }
  const auto& inv = in.report.invariants;
  const auto& beta_odd = in.report.odd.independence_upper;
  r.lhs = beta_odd.value;
  r.rhs = inv.best_two_classes;
  r.values = {{"beta_odd", beta_odd.value}, {"best_two_classes", inv.best_two_classes}};
  r.status = beta_odd.value == inv.best_two_classes ? CheckStatus::holds : CheckStatus::fails;
  if (r.status == CheckStatus::fails)
    attach(r, in,
           {{"beta_odd_witness", beta_odd.witness}, {"best_two_classes_set", inv.best_two_set}});
  return r;
}

CheckResult check_kral_voss(const VerifyInput& in) {
  auto r = base("kral_voss");
  const auto& inv = in.report.invariants;
  const int n = in.graph.vertex_count();
  const auto& beta_odd = in.report.odd.independence_upper;
  r.lhs = beta_odd.value;
  r.rhs = n - inv.tau_odd;
  r.values = {{"beta_odd", beta_odd.value},
              {"n", n},
              {"tau_odd", inv.tau_odd},
              {"planar", in.flags.planar ? 1 : 0}};
  bool ok = beta_odd.value <= n - inv.tau_odd;
  if (in.flags.planar)
    ok = ok && beta_odd.value >= n - 2 * inv.tau_odd;
  else
    r.note = "planar lower bound skipped (not flagged planar)";
  r.status = ok ? CheckStatus::holds : CheckStatus::fails;
  if (!ok) attach(r, in, {{"beta_odd_witness", beta_odd.witness}});
  return r;
}

CheckResult check_two_tuple(const VerifyInput& in) {
  auto r = base("two_tuple");
  const auto& inv = in.report.invariants;
  const auto& gamma_cy = in.report.cycle.domination_lower;
  r.lhs = inv.gamma2;
  r.rhs = gamma_cy.value;
  r.values = {{"gamma2", inv.gamma2}, {"gamma_cy", gamma_cy.value}};
  r.status = inv.gamma2 <= gamma_cy.value ? CheckStatus::holds : CheckStatus::fails;
  if (r.status == CheckStatus::fails)
    attach(r, in, {{"gamma2_set", inv.gamma2_set}, {"gamma_cy_witness", gamma_cy.witness}});
  return r;
}

CheckResult check_cy_dom_bound(const VerifyInput& in) {
  auto r = base("cy_dom_bound");
  const auto& inv = in.report.invariants;
  const auto& gamma_cy = in.report.cycle.domination_lower;
  r.lhs = inv.girth - 1 + inv.kappa;
  r.rhs = gamma_cy.value;
  r.values = {{"girth", inv.girth}, {"kappa", inv.kappa}, {"gamma_cy", gamma_cy.value}};
  r.status = r.lhs <= r.rhs ? CheckStatus::holds : CheckStatus::fails;
  if (r.status == CheckStatus::fails)
    attach(r, in, {{"gamma_cy_witness", gamma_cy.witness}});
  return r;
}

CheckResult chain_check(const char* name, const VerifyInput& in, const ChainParameters& c,
                        const char* suffix) {
  auto r = base(name);
  auto key = [&](const char* stem) { return std::string(stem) + suffix; };
  r.lhs = c.irredundance_lower.value;
  r.rhs = c.irredundance_upper.value;
  r.values = {{key("ir"), c.irredundance_lower.value},
              {key("gamma"), c.domination_lower.value},
              {key("i"), c.independence_lower.value},
              {key("beta"), c.independence_upper.value},
              {key("Gamma"), c.domination_upper.value},
              {key("IR"), c.irredundance_upper.value}};
  r.status = c.chain_holds() ? CheckStatus::holds : CheckStatus::fails;
  if (r.status == CheckStatus::fails) {
    CheckCounterexample ce;
    ce.graph6 = to_graph6(in.graph);
    ce.sets[key("ir") + "_witness"] = set_to_vertices(c.irredundance_lower.witness);
    ce.sets[key("gamma") + "_witness"] = set_to_vertices(c.domination_lower.witness);
    ce.sets[key("i") + "_witness"] = set_to_vertices(c.independence_lower.witness);
    ce.sets[key("beta") + "_witness"] = set_to_vertices(c.independence_upper.witness);
    ce.sets[key("Gamma") + "_witness"] = set_to_vertices(c.domination_upper.witness);
    ce.sets[key("IR") + "_witness"] = set_to_vertices(c.irredundance_upper.witness);
    r.counterexample = std::move(ce);
  }
  return r;
}

CheckResult check_cy_chain(const VerifyInput& in) {
  return chain_check("cy_chain", in, in.report.cycle, "_cy");
}

CheckResult check_odd_chain(const VerifyInput& in) {
  return chain_check("odd_chain", in, in.report.odd, "_odd");
}

CheckResult subset_lemma(const char* name, const VerifyInput& in, PredicateKind from,
                         bool from_maximal, PredicateKind to, bool to_maximal,
                         const char* count_key) {
  auto r = base(name);
  const auto& c = in.classifier;
  const std::uint64_t size = std::uint64_t{1} << in.graph.vertex_count();
  long long seen = 0;
  for (std::uint64_t s = 0; s < size; ++s) {
    const bool from_ok = from_maximal ? c.maximal_member(from, s) : c.minimal_member(from, s);
    if (!from_ok) continue;
    ++seen;
    const bool to_ok = to_maximal ? c.maximal_member(to, s) : c.minimal_member(to, s);
    if (!to_ok) {
      r.values = {{count_key, seen}};
      r.status = CheckStatus::fails;
      attach(r, in, {{"set", s}});
      return r;
    }
  }
  r.values = {{count_key, seen}};
  r.status = CheckStatus::holds;
  return r;
}

CheckResult check_lemma_cy2(const VerifyInput& in) {
  return subset_lemma("lemma_cy2", in, PredicateKind::cycle_independent, true,
                      PredicateKind::cycle_dominating, false, "maximal_independent_sets");
}

CheckResult check_lemma_indep_dom(const VerifyInput& in) {
  return subset_lemma("lemma_indep_dom", in, PredicateKind::odd_cycle_independent, true,
                      PredicateKind::odd_cycle_dominating, false, "maximal_independent_sets");
}

CheckResult check_lemma_dom_irr(const VerifyInput& in) {
  return subset_lemma("lemma_dom_irr", in, PredicateKind::odd_cycle_dominating, false,
                      PredicateKind::odd_cycle_irredundant, true, "minimal_dominating_sets");
}

CheckResult check_gamma_odd_upper(const VerifyInput& in) {
  auto r = base("gamma_odd_upper");
  const auto& inv = in.report.invariants;
  if (inv.chi < 2) {
    r.note = "fewer than two color classes";
    r.values = {{"chi", inv.chi}};
    return r;
  }
  const int n = in.graph.vertex_count();
  const auto& cap_gamma = in.report.odd.domination_upper;
  r.lhs = 2 * (n / inv.chi);
  r.rhs = n - inv.tau_odd;
  r.values = {{"Gamma_odd", cap_gamma.value}, {"chi", inv.chi}, {"n", n},
              {"tau_odd", inv.tau_odd}};
  const bool ok = r.lhs <= cap_gamma.value && cap_gamma.value <= r.rhs;
  r.status = ok ? CheckStatus::holds : CheckStatus::fails;
  if (!ok) attach(r, in, {{"Gamma_odd_witness", cap_gamma.witness}});
  return r;
}

CheckResult check_gamma_odd_lower(const VerifyInput& in) {
  auto r = base("gamma_odd_lower");
  const auto& inv = in.report.invariants;
  const int n = in.graph.vertex_count();
  const auto& gamma_odd = in.report.odd.domination_lower;
  const bool bipartite = inv.chi <= 2;
  if (bipartite) {
    r.lhs = gamma_odd.value;
    r.rhs = n;
    r.values = {{"gamma_odd", gamma_odd.value}, {"n", n}, {"bipartite", 1}};
    r.note = "bipartite case: gamma_odd equals the order";
    r.status = gamma_odd.value == n ? CheckStatus::holds : CheckStatus::fails;
  } else {
    r.lhs = inv.girth - 1 + inv.kappa_odd;
    r.rhs = n - inv.tau_odd;
    r.values = {{"gamma_odd", gamma_odd.value}, {"girth", inv.girth},
                {"kappa_odd", inv.kappa_odd},   {"n", n},
                {"tau_odd", inv.tau_odd},       {"bipartite", 0}};
    const bool ok = r.lhs <= gamma_odd.value && gamma_odd.value <= r.rhs;
    r.status = ok ? CheckStatus::holds : CheckStatus::fails;
  }
  if (r.status == CheckStatus::fails) attach(r, in, {{"gamma_odd_witness", gamma_odd.witness}});
  return r;
}

CheckResult check_cy_ir_bound(const VerifyInput& in) {
  auto r = base("cy_ir_bound");
  const auto& inv = in.report.invariants;
  const auto& ir_cy = in.report.cycle.irredundance_lower;
  r.lhs = inv.girth - 1 + inv.kappa;
  r.rhs = ir_cy.value;
  r.values = {{"girth", inv.girth}, {"kappa", inv.kappa}, {"ir_cy", ir_cy.value}};
  r.status = r.lhs <= r.rhs ? CheckStatus::holds : CheckStatus::fails;
  if (r.status == CheckStatus::fails) attach(r, in, {{"ir_cy_witness", ir_cy.witness}});
  return r;
}

CheckResult check_ir_odd_bound(const VerifyInput& in) {
  auto r = base("ir_odd_bound");
  const auto& inv = in.report.invariants;
  const int n = in.graph.vertex_count();
  const auto& ir_odd = in.report.odd.irredundance_lower;
  const bool bipartite = inv.chi <= 2;
  const long long bound = inv.girth - 1 + inv.kappa_odd;
  const bool corrected = bipartite ? ir_odd.value == n : bound <= ir_odd.value;
  const bool uncorrected = bipartite ? bound <= ir_odd.value : ir_odd.value == n;
  r.lhs = bound;
  r.rhs = ir_odd.value;
  r.values = {{"ir_odd", ir_odd.value}, {"girth", inv.girth},
              {"kappa_odd", inv.kappa_odd}, {"n", n},
              {"bipartite", bipartite ? 1 : 0}, {"uncorrected_holds", uncorrected ? 1 : 0}};
  r.note = std::string("uncorrected form (bipartite: girth - 1 + kappa_odd <= ir_odd; "
                       "otherwise ir_odd = n) ") +
           (uncorrected ? "holds" : "fails") + " on this graph";
  r.status = corrected ? CheckStatus::holds : CheckStatus::fails;
  if (!corrected) attach(r, in, {{"ir_odd_witness", ir_odd.witness}});
  return r;
}

CheckResult check_decycling_id(const VerifyInput& in) {
  auto r = base("decycling_id");
  const auto& inv = in.report.invariants;
  const int n = in.graph.vertex_count();
  const auto& beta_cy = in.report.cycle.independence_upper;
  r.lhs = n;
  r.rhs = beta_cy.value + inv.nabla;
  r.values = {{"n", n}, {"beta_cy", beta_cy.value}, {"nabla", inv.nabla}};
  r.status = r.lhs == r.rhs ? CheckStatus::holds : CheckStatus::fails;
  if (r.status == CheckStatus::fails)
    attach(r, in, {{"beta_cy_witness", beta_cy.witness}, {"nabla_set", inv.nabla_set}});
  return r;
}

CheckResult check_cover_id(const VerifyInput& in) {
  auto r = base("cover_id");
  const auto& inv = in.report.invariants;
  const int n = in.graph.vertex_count();
  const auto& beta_odd = in.report.odd.independence_upper;
  r.lhs = beta_odd.value;
  r.rhs = n - inv.tau_cover;
  r.values = {{"beta_odd", beta_odd.value}, {"n", n}, {"tau_cover", inv.tau_cover}};
  r.status = r.lhs == r.rhs ? CheckStatus::holds : CheckStatus::fails;
  if (r.status == CheckStatus::fails)
    attach(r, in, {{"beta_odd_witness", beta_odd.witness}, {"tau_cover_set", inv.tau_cover_set}});
  return r;
}

CheckResult check_t_bound(const VerifyInput& in) {
  auto r = base("t_bound");
  const auto& inv = in.report.invariants;
  const auto& beta_cy = in.report.cycle.independence_upper;
  r.lhs = inv.t;
  r.rhs = beta_cy.value;
  r.values = {{"t", inv.t}, {"beta_cy", beta_cy.value}};
  r.status = r.lhs <= r.rhs ? CheckStatus::holds : CheckStatus::fails;
  if (r.status == CheckStatus::fails)
    attach(r, in, {{"t_set", inv.t_set}, {"beta_cy_witness", beta_cy.witness}});
  return r;
}

struct CheckEntry {
  const char* name;
  CheckResult (*fn)(const VerifyInput&);
};

constexpr CheckEntry registry[] = {
    {"easy_bounds_cycle", check_easy_bounds_cycle},
    {"indep_char", check_indep_char},
    {"cy_dom_char", check_cy_dom_char},
    {"cy_ir_char", check_cy_ir_char},
    {"odd_strict", check_odd_strict},
    {"odd_indep_bound1", check_odd_indep_bound1},
    {"odd_indep_bound2", check_odd_indep_bound2},
    {"mop_beta", check_mop_beta},
    {"kral_voss", check_kral_voss},
    {"two_tuple", check_two_tuple},
    {"cy_dom_bound", check_cy_dom_bound},
    {"cy_chain", check_cy_chain},
    {"odd_chain", check_odd_chain},
    {"lemma_cy2", check_lemma_cy2},
    {"lemma_indep_dom", check_lemma_indep_dom},
    {"lemma_dom_irr", check_lemma_dom_irr},
    {"gamma_odd_upper", check_gamma_odd_upper},
    {"gamma_odd_lower", check_gamma_odd_lower},
    {"cy_ir_bound", check_cy_ir_bound},
    {"ir_odd_bound", check_ir_odd_bound},
    {"decycling_id", check_decycling_id},
    {"cover_id", check_cover_id},
    {"t_bound", check_t_bound},
};

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : registry) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

bool is_check_name(const std::string& name) {
  for (const auto& e : registry)
    if (name == e.name) return true;
  return false;
}

CheckResult run_check(const std::string& name, const VerifyInput& in) {
  for (const auto& e : registry)
    if (name == e.name) return e.fn(in);
  throw input_error("unknown check: " + name);
}

std::vector<CheckResult> verify_all(const VerifyInput& in, const std::vector<std::string>& checks) {
  for (const auto& name : checks)
    if (!is_check_name(name)) throw input_error("unknown check: " + name);
  std::vector<CheckResult> out;
  for (const auto& e : registry) {
    if (!checks.empty() &&
        std::find(checks.begin(), checks.end(), e.name) == checks.end())
      continue;
    out.push_back(e.fn(in));
  }
  return out;
}

}  // namespace cyclechain
