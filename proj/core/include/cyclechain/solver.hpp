#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclechain/classifier.hpp"
#include "cyclechain/graph.hpp"
#include "cyclechain/invariants.hpp"
#include "cyclechain/predicates.hpp"

namespace cyclechain {

enum class Extremum { lower, upper };

// value plus one optimal set; ties resolve to the numerically smallest
// bitmask, so results are reproducible across runs and machines
struct ParameterValue {
  int value = 0;
  VertexSet witness = 0;
};

// The six parameters of one chain, listed in chain order.
struct ChainParameters {
  ParameterValue irredundance_lower;   // min maximal irredundant
  ParameterValue domination_lower;     // min dominating
  ParameterValue independence_lower;   // min maximal independent
  ParameterValue independence_upper;   // max independent
  ParameterValue domination_upper;     // max minimal dominating
  ParameterValue irredundance_upper;   // max irredundant

  bool chain_holds() const;
};

struct ParameterReport {
  std::string graph6;
  std::string label;
  int n = 0;
  ChainParameters cycle;
  ChainParameters odd;
  InvariantBundle invariants;
};

// lower: min over maximal members for hereditary and irredundant kinds,
// min over members for dominating kinds.  upper: max over members for
// hereditary and irredundant kinds, max over minimal members for
// dominating kinds.  Every witness is re-verified before returning;
// a failure throws std::logic_error.
ParameterValue compute_parameter(const Graph& g, const SubsetClassifier& c,
                                 PredicateKind kind, Extremum which);

ChainParameters compute_chain(const Graph& g, const SubsetClassifier& c, CycleParity parity);

ParameterReport compute_all(const Graph& g, const SolverOptions& opt = {});
ParameterReport compute_all(const Graph& g, const SubsetClassifier& c,
                            const SolverOptions& opt = {});

enum class EnumMode { all_members, all_maximal, all_minimal };

std::vector<VertexSet> enumerate_extremal_sets(const Graph& g, const SubsetClassifier& c,
                                               PredicateKind kind, EnumMode mode);

}  // namespace cyclechain
