#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclechain/classifier.hpp"
#include "cyclechain/families.hpp"
#include "cyclechain/graph.hpp"
#include "cyclechain/solver.hpp"

namespace cyclechain {

enum class CheckStatus { holds, fails, not_applicable };

std::string status_name(CheckStatus s);

// Concrete refutation data: the graph plus every named set the check
// compared, so the row can be replayed without the original run.
struct CheckCounterexample {
  std::string graph6;
  std::map<std::string, std::vector<int>> sets;
};

struct CheckResult {
  std::string check;
  CheckStatus status = CheckStatus::not_applicable;
  long long lhs = 0;
  long long rhs = 0;
  std::map<std::string, long long> values;
  std::string note;
  std::optional<CheckCounterexample> counterexample;
};

struct VerifyInput {
  const Graph& graph;
  FamilyFlags flags;
  const ParameterReport& report;
  const SubsetClassifier& classifier;
};

// Registry order; verify runs these subsets in this order.
const std::vector<std::string>& check_names();
bool is_check_name(const std::string& name);

CheckResult run_check(const std::string& name, const VerifyInput& in);

std::vector<CheckResult> verify_all(const VerifyInput& in,
                                    const std::vector<std::string>& checks = {});

// G consists of an induced path on g-1 vertices whose endpoints are the
// shared neighborhood of every off-path vertex, with no off-path vertex
// adjacent to the path interior.
bool path_structure(const Graph& g, int g_girth);

}  // namespace cyclechain
