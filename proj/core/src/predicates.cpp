#include "cyclechain/predicates.hpp"

#include "cyclechain/cycles.hpp"

namespace cyclechain {

bool dominates(const Graph& g, CycleParity parity, VertexSet s, int u) {
  const CycleMembership cm = cycle_membership(g, s | vertex_bit(u));
  return contains(parity == CycleParity::any ? cm.on_cycle : cm.on_odd_cycle, u);
}

namespace {

bool is_irredundant(const Graph& g, CycleParity parity, VertexSet s) {
  const CycleMembership cm = cycle_membership(g, s);
  const VertexSet busy = parity == CycleParity::any ? cm.on_cycle : cm.on_odd_cycle;
  const VertexSet outside = full_set(g.vertex_count()) & ~s;
  for (int u : bits_of(s & busy)) {
    bool witnessed = false;
    for (int v : bits_of(outside)) {
      if (dominates(g, parity, s, v) && !dominates(g, parity, s & ~vertex_bit(u), v)) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

}  // namespace

bool is_member(const Graph& g, PredicateKind kind, VertexSet s) {
  const CycleParity parity = kind_parity(kind);
  switch (kind) {
    case PredicateKind::cycle_independent:
      return is_acyclic(g, s);
    case PredicateKind::odd_cycle_independent:
      return is_bipartite(g, s);
    case PredicateKind::cycle_dominating:
    case PredicateKind::odd_cycle_dominating:
      for (int u : bits_of(full_set(g.vertex_count()) & ~s))
        if (!dominates(g, parity, s, u)) return false;
      return true;
    case PredicateKind::cycle_irredundant:
    case PredicateKind::odd_cycle_irredundant:
      return is_irredundant(g, parity, s);
  }
  return false;
}

bool is_maximal(const Graph& g, PredicateKind kind, VertexSet s) {
  if (!is_member(g, kind, s)) return false;
  const VertexSet free = full_set(g.vertex_count()) & ~s;
  if (is_hereditary_kind(kind) || is_ancestral_kind(kind)) {
    for (int v : bits_of(free))
      if (is_member(g, kind, s | vertex_bit(v))) return false;
    return true;
  }
  for (VertexSet add = free; add != 0; add = (add - 1) & free)
    if (is_member(g, kind, s | add)) return false;
  return true;
}

bool is_minimal(const Graph& g, PredicateKind kind, VertexSet s) {
  if (!is_member(g, kind, s)) return false;
  if (is_hereditary_kind(kind) || is_ancestral_kind(kind)) {
    for (int v : bits_of(s))
      if (is_member(g, kind, s & ~vertex_bit(v))) return false;
    return true;
  }
  if (s == 0) return true;
  for (VertexSet sub = (s - 1) & s;; sub = (sub - 1) & s) {
    if (is_member(g, kind, sub)) return false;
    if (sub == 0) break;
  }
  return true;
}

std::string kind_name(PredicateKind k) {
  switch (k) {
    case PredicateKind::cycle_independent: return "cycle_independent";
    case PredicateKind::cycle_dominating: return "cycle_dominating";
    case PredicateKind::cycle_irredundant: return "cycle_irredundant";
    case PredicateKind::odd_cycle_independent: return "odd_cycle_independent";
    case PredicateKind::odd_cycle_dominating: return "odd_cycle_dominating";
    case PredicateKind::odd_cycle_irredundant: return "odd_cycle_irredundant";
  }
  return "unknown";
}

}  // namespace cyclechain
