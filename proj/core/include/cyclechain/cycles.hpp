#pragma once

#include "cyclechain/graph.hpp"

namespace cyclechain {

// Per-vertex cycle membership inside one induced subgraph.
struct CycleMembership {
  VertexSet on_cycle = 0;      // vertices lying on some cycle of the subgraph
  VertexSet on_odd_cycle = 0;  // vertices lying on some odd cycle of the subgraph
};

// Membership analysis of the subgraph induced by s.  A vertex lies on a
// cycle iff its biconnected block has at least three vertices, and on an
// odd cycle iff its block is non-bipartite.
CycleMembership cycle_membership(const Graph& g, VertexSet s);

int count_components(const Graph& g, VertexSet s);
int induced_edge_count(const Graph& g, VertexSet s);

bool is_acyclic(const Graph& g, VertexSet s);
bool is_bipartite(const Graph& g, VertexSet s);

bool on_cycle(const Graph& g, VertexSet s, int v);
bool on_odd_cycle(const Graph& g, VertexSet s, int v);

}  // namespace cyclechain
