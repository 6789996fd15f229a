#include "cyclechain/report_io.hpp"

#include <sstream>

#include <json.hpp>

namespace cyclechain {

namespace {

using nlohmann::json;

json set_json(VertexSet s) { return json(set_to_vertices(s)); }

void put_chain(json& params, json& witnesses, const ChainParameters& c, const char* suffix) {
  auto key = [&](const char* stem) { return std::string(stem) + suffix; };
  const std::pair<const char*, const ParameterValue*> rows[] = {
      {"ir", &c.irredundance_lower},  {"gamma", &c.domination_lower},
      {"i", &c.independence_lower},   {"beta", &c.independence_upper},
      {"Gamma", &c.domination_upper}, {"IR", &c.irredundance_upper},
  };
  for (const auto& [stem, pv] : rows) {
    params[key(stem)] = pv->value;
    witnesses[key(stem)] = set_json(pv->witness);
  }
}

json invariants_json(const InvariantBundle& inv) {
  json j;
  j["girth"] = inv.girth;
  j["kappa"] = inv.kappa;
  j["kappa_odd"] = inv.kappa_odd;
  j["tau"] = inv.tau;
  j["tau_odd"] = inv.tau_odd;
  j["chi"] = inv.chi;
  j["best_two_classes"] = inv.best_two_classes;
  j["t"] = inv.t;
  j["gamma2"] = inv.gamma2;
  j["nabla"] = inv.nabla;
  j["tau_cover"] = inv.tau_cover;
  return j;
}

json flags_json(const FamilyFlags& f) {
  json a = json::array();
  if (f.planar) a.push_back("planar");
  if (f.maximal_outerplanar) a.push_back("maximal_outerplanar");
  if (f.bipartite_known) a.push_back("bipartite_known");
  return a;
}

json check_json(const CheckResult& c) {
  json j;
  j["check"] = c.check;
  j["status"] = status_name(c.status);
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["values"] = json(c.values);
  j["note"] = c.note;
  if (c.counterexample) {
    json ce;
    ce["graph6"] = c.counterexample->graph6;
    ce["sets"] = json(c.counterexample->sets);
    j["counterexample"] = ce;
  }
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string values_cell(const std::map<std::string, long long>& values) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : values) {
    if (!first) os << ';';
    os << k << '=' << v;
    first = false;
  }
  return os.str();
}

}  // namespace

std::string report_to_json(const ParameterReport& r) {
  json params, witnesses;
  put_chain(params, witnesses, r.cycle, "_cy");
  put_chain(params, witnesses, r.odd, "_odd");
  json j;
  j["graph6"] = r.graph6;
  j["label"] = r.label;
  j["n"] = r.n;
  j["parameters"] = params;
  j["witnesses"] = witnesses;
  j["invariants"] = invariants_json(r.invariants);
  return dump(j);
}

std::string report_csv_header() {
  return "graph6,label,n,"
         "ir_cy,gamma_cy,i_cy,beta_cy,Gamma_cy,IR_cy,"
         "ir_odd,gamma_odd,i_odd,beta_odd,Gamma_odd,IR_odd,"
         "girth,kappa,kappa_odd,tau,tau_odd,chi,best_two_classes,t,gamma2,nabla,tau_cover\n";
}

std::string report_to_csv(const ParameterReport& r) {
  const auto& inv = r.invariants;
  std::ostringstream os;
  os << csv_quote(r.graph6) << ',' << csv_quote(r.label) << ',' << r.n << ','
     << r.cycle.irredundance_lower.value << ',' << r.cycle.domination_lower.value << ','
     << r.cycle.independence_lower.value << ',' << r.cycle.independence_upper.value << ','
     << r.cycle.domination_upper.value << ',' << r.cycle.irredundance_upper.value << ','
     << r.odd.irredundance_lower.value << ',' << r.odd.domination_lower.value << ','
     << r.odd.independence_lower.value << ',' << r.odd.independence_upper.value << ','
     << r.odd.domination_upper.value << ',' << r.odd.irredundance_upper.value << ','
     << inv.girth << ',' << inv.kappa << ',' << inv.kappa_odd << ',' << inv.tau << ','
     << inv.tau_odd << ',' << inv.chi << ',' << inv.best_two_classes << ',' << inv.t << ','
     << inv.gamma2 << ',' << inv.nabla << ',' << inv.tau_cover << '\n';
  return os.str();
}

std::string check_to_json(const std::string& graph6, const std::string& label,
                          const CheckResult& c) {
  json j = check_json(c);
  j["graph6"] = graph6;
  j["label"] = label;
  return dump(j);
}

std::string check_csv_header() { return "graph6,label,check,status,lhs,rhs,values,note\n"; }

std::string check_to_csv(const std::string& graph6, const std::string& label,
                         const CheckResult& c) {
  std::ostringstream os;
  os << csv_quote(graph6) << ',' << csv_quote(label) << ',' << c.check << ','
     << status_name(c.status) << ',' << c.lhs << ',' << c.rhs << ','
     << csv_quote(values_cell(c.values)) << ',' << csv_quote(c.note) << '\n';
  return os.str();
}

std::string verify_to_json(const std::string& graph6, const std::string& label,
                           const FamilyFlags& flags, const std::vector<CheckResult>& checks) {
  json arr = json::array();
  long long holds = 0, fails = 0, not_applicable = 0;
  for (const auto& c : checks) {
    arr.push_back(check_json(c));
    switch (c.status) {
      case CheckStatus::holds: ++holds; break;
      case CheckStatus::fails: ++fails; break;
      case CheckStatus::not_applicable: ++not_applicable; break;
    }
  }
  json j;
  j["graph6"] = graph6;
  j["label"] = label;
  j["flags"] = flags_json(flags);
  j["checks"] = arr;
  j["summary"] = {{"holds", holds}, {"fails", fails}, {"not_applicable", not_applicable}};
  return dump(j);
}

std::string summary_to_json(const SweepSummary& s) {
  json tallies;
  for (const auto& [name, t] : s.tallies)
    tallies[name] = {{"holds", t[0]}, {"fails", t[1]}, {"not_applicable", t[2]}};
  json failures = json::array();
  for (const auto& f : s.failures) {
    json row;
    row["index"] = f.index;
    row["graph6"] = f.graph6;
    row["check"] = f.check;
    failures.push_back(row);
  }
  json j;
  j["seed"] = s.seed;
  j["cap"] = s.cap;
  j["graph_count"] = s.graph_count;
  j["sources"] = json(s.sources);
  j["tallies"] = tallies;
  j["failures"] = failures;
  return dump(j);
}

std::string summary_to_csv(const SweepSummary& s) {
  std::ostringstream os;
  os << "check,holds,fails,not_applicable\n";
  for (const auto& [name, t] : s.tallies)
    os << name << ',' << t[0] << ',' << t[1] << ',' << t[2] << '\n';
  return os.str();
}

std::string corpus_entry_json(const std::string& graph6, const std::string& label,
                              const FamilyFlags& flags, const CheckResult& c) {
  json j;
  j["graph6"] = graph6;
  j["label"] = label;
  j["flags"] = flags_json(flags);
  j["check"] = check_json(c);
  return dump(j);
}

}  // namespace cyclechain
