#pragma once

#include <string>

#include "cyclechain/graph.hpp"

namespace cyclechain {

enum class CycleParity { any, odd };

// The six set properties whose extremal sizes form the chain.
enum class PredicateKind {
  cycle_independent,       // induced subgraph acyclic
  cycle_dominating,        // every outside vertex completes a cycle
  cycle_irredundant,       // every member is idle or privately needed
  odd_cycle_independent,   // induced subgraph bipartite
  odd_cycle_dominating,
  odd_cycle_irredundant,
};

// u lies on a cycle of the given parity in the subgraph induced by
// s | bit(u).  For u in s this degenerates to membership within <s>.
bool dominates(const Graph& g, CycleParity parity, VertexSet s, int u);

bool is_member(const Graph& g, PredicateKind kind, VertexSet s);

// Maximality and minimality within the property's member family.
// Hereditary kinds test one-element extensions, ancestral kinds test
// one-element deletions; the remaining kinds scan all proper
// supersets / subsets.
bool is_maximal(const Graph& g, PredicateKind kind, VertexSet s);
bool is_minimal(const Graph& g, PredicateKind kind, VertexSet s);

// closed under taking subsets / supersets
constexpr bool is_hereditary_kind(PredicateKind k) {
  return k == PredicateKind::cycle_independent || k == PredicateKind::odd_cycle_independent;
}
constexpr bool is_ancestral_kind(PredicateKind k) {
  return k == PredicateKind::cycle_dominating || k == PredicateKind::odd_cycle_dominating;
}

constexpr CycleParity kind_parity(PredicateKind k) {
  switch (k) {
    case PredicateKind::cycle_independent:
    case PredicateKind::cycle_dominating:
    case PredicateKind::cycle_irredundant:
      return CycleParity::any;
    default:
      return CycleParity::odd;
  }
}

std::string kind_name(PredicateKind k);

}  // namespace cyclechain
