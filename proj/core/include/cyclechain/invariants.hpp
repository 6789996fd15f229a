#pragma once

#include <vector>

#include "cyclechain/graph.hpp"

namespace cyclechain {

// Size limits for the exponential solvers.  cap applies to ordinary runs
// and can be raised up to hard_cap; validate() throws resource_error when
// a graph exceeds the active cap and input_error on inconsistent limits.
struct SolverOptions {
  int cap = 20;
  int hard_cap = 28;
  long long max_chordless_cycles = 1'000'000;

  void validate(int n) const;
};

// Vertices lying on no cycle (of the relevant parity) plus their count.
struct KappaResult {
  VertexSet support = 0;
  int value = 0;
};

// Maximum cardinality family of vertex-disjoint (odd) cycles.
struct PackingResult {
  int value = 0;
  std::vector<VertexSet> cycles;  // one optimal family, chordless members
};

// Chromatic number together with the largest set inducing a bipartite
// subgraph whose removal leaves a (chi - 2)-colorable graph.
struct ChromaticData {
  int chi = 0;
  int best_two_classes = 0;
  VertexSet best_two_witness = 0;
};

struct SetResult {
  int value = 0;
  VertexSet witness = 0;
};

// girth of g; 1 on acyclic graphs by convention
int girth(const Graph& g);

KappaResult kappa(const Graph& g);
KappaResult kappa_odd(const Graph& g);

// All chordless cycles as vertex sets (only odd ones when odd_only).
// Throws resource_error past opt.max_chordless_cycles.
std::vector<VertexSet> chordless_cycles(const Graph& g, bool odd_only,
                                        const SolverOptions& opt = {});

PackingResult max_cycle_packing(const Graph& g, const SolverOptions& opt = {});
PackingResult max_odd_cycle_packing(const Graph& g, const SolverOptions& opt = {});

ChromaticData chromatic_data(const Graph& g, const SolverOptions& opt = {});

// Largest set inducing a tree (connected and acyclic); 0 on the empty graph.
SetResult max_induced_tree(const Graph& g, const SolverOptions& opt = {});

// Smallest S with |N(u) & S| >= k for every u outside S.
SetResult k_tuple_domination(const Graph& g, int k, const SolverOptions& opt = {});

// Smallest deletion set leaving an acyclic / bipartite graph.
SetResult decycling_number(const Graph& g, const SolverOptions& opt = {});
SetResult odd_cycle_cover_number(const Graph& g, const SolverOptions& opt = {});

// One record with every auxiliary invariant the checks consume.
struct InvariantBundle {
  int girth = 0;
  int kappa = 0;             // vertices on no cycle
  int kappa_odd = 0;         // vertices on no odd cycle
  VertexSet kappa_set = 0;
  VertexSet kappa_odd_set = 0;
  int tau = 0;               // max vertex-disjoint cycle packing
  int tau_odd = 0;           // max vertex-disjoint odd cycle packing
  std::vector<VertexSet> tau_packing;
  std::vector<VertexSet> tau_odd_packing;
  int chi = 0;
  int best_two_classes = 0;
  VertexSet best_two_set = 0;
  int t = 0;                 // max induced tree order
  VertexSet t_set = 0;
  int gamma2 = 0;            // 2-tuple domination number
  VertexSet gamma2_set = 0;
  int nabla = 0;             // decycling number
  VertexSet nabla_set = 0;
  int tau_cover = 0;         // odd cycle transversal number
  VertexSet tau_cover_set = 0;
};

InvariantBundle compute_invariants(const Graph& g, const SolverOptions& opt = {});

}  // namespace cyclechain
