#include "cyclechain/solver.hpp"

#include <stdexcept>

#include "cyclechain/cycles.hpp"
#include "cyclechain/graph_io.hpp"

namespace cyclechain {

bool ChainParameters::chain_holds() const {
  return irredundance_lower.value <= domination_lower.value &&
         domination_lower.value <= independence_lower.value &&
         independence_lower.value <= independence_upper.value &&
         independence_upper.value <= domination_upper.value &&
         domination_upper.value <= irredundance_upper.value;
}

namespace {

// Maximality of an irredundant witness cannot rely on one-element
// extensions, so scan every proper superset through the classifier.
bool classifier_maximal(const SubsetClassifier& c, PredicateKind kind, VertexSet s) {
  if (!c.member(kind, s)) return false;
  const VertexSet free = full_set(c.vertex_count()) & ~s;
  for (VertexSet add = free; add != 0; add = (add - 1) & free)
    if (c.member(kind, s | add)) return false;
  return true;
}

// Minimum members of the ancestral families are minimal and maximum
// members of the others are maximal, so both extremes share one audit:
// domination witnesses must be minimal, the rest maximal.
void check_witness(const Graph& g, const SubsetClassifier& c, PredicateKind kind, VertexSet s) {
  if (!is_member(g, kind, s)) throw std::logic_error("witness fails its predicate");
  bool extremal;
  if (is_ancestral_kind(kind))
    extremal = is_minimal(g, kind, s);
  else if (is_hereditary_kind(kind))
    extremal = is_maximal(g, kind, s);
  else
    extremal = classifier_maximal(c, kind, s);
  if (!extremal) throw std::logic_error("witness fails extremality");
}

}  // namespace

ParameterValue compute_parameter(const Graph& g, const SubsetClassifier& c, PredicateKind kind,
                                 Extremum which) {
  const std::uint64_t size = std::uint64_t{1} << c.vertex_count();
  const bool ancestral = is_ancestral_kind(kind);
  int best = -1;
  VertexSet witness = 0;
  for (std::uint64_t s = 0; s < size; ++s) {
    bool eligible;
    if (which == Extremum::lower)
      eligible = ancestral ? c.member(kind, s) : c.maximal_member(kind, s);
    else
      eligible = ancestral ? c.minimal_member(kind, s) : c.member(kind, s);
    if (!eligible) continue;
    const int sz = set_size(s);
    const bool better = best < 0 || (which == Extremum::lower ? sz < best : sz > best);
    if (better) {
      best = sz;
      witness = s;
    }
  }
  if (best < 0) throw std::logic_error("empty member family");
  check_witness(g, c, kind, witness);
  return {best, witness};
}

ChainParameters compute_chain(const Graph& g, const SubsetClassifier& c, CycleParity parity) {
  const bool odd = parity == CycleParity::odd;
  const PredicateKind ind =
      odd ? PredicateKind::odd_cycle_independent : PredicateKind::cycle_independent;
  const PredicateKind dom =
      odd ? PredicateKind::odd_cycle_dominating : PredicateKind::cycle_dominating;
  const PredicateKind irr =
      odd ? PredicateKind::odd_cycle_irredundant : PredicateKind::cycle_irredundant;
  ChainParameters out;
  out.irredundance_lower = compute_parameter(g, c, irr, Extremum::lower);
  out.domination_lower = compute_parameter(g, c, dom, Extremum::lower);
  out.independence_lower = compute_parameter(g, c, ind, Extremum::lower);
  out.independence_upper = compute_parameter(g, c, ind, Extremum::upper);
  out.domination_upper = compute_parameter(g, c, dom, Extremum::upper);
  out.irredundance_upper = compute_parameter(g, c, irr, Extremum::upper);
  return out;
}

ParameterReport compute_all(const Graph& g, const SolverOptions& opt) {
  return compute_all(g, SubsetClassifier::build(g, opt), opt);
}

ParameterReport compute_all(const Graph& g, const SubsetClassifier& c, const SolverOptions& opt) {
  ParameterReport r;
  r.graph6 = to_graph6(g);
  r.label = g.label();
  r.n = g.vertex_count();
  r.cycle = compute_chain(g, c, CycleParity::any);
  r.odd = compute_chain(g, c, CycleParity::odd);
  r.invariants = compute_invariants(g, opt);
  return r;
}

std::vector<VertexSet> enumerate_extremal_sets(const Graph& g, const SubsetClassifier& c,
                                               PredicateKind kind, EnumMode mode) {
  (void)g;
  std::vector<VertexSet> out;
  const std::uint64_t size = std::uint64_t{1} << c.vertex_count();
  for (std::uint64_t s = 0; s < size; ++s) {
    bool take = false;
    switch (mode) {
      case EnumMode::all_members: take = c.member(kind, s); break;
      case EnumMode::all_maximal: take = c.maximal_member(kind, s); break;
      case EnumMode::all_minimal: take = c.minimal_member(kind, s); break;
    }
    if (take) out.push_back(s);
  }
  return out;
}

}  // namespace cyclechain
