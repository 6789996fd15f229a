#include "cyclechain/cycles.hpp"

#include <array>

namespace cyclechain {

namespace {

// 2-colors the component of `start` inside `mask`; false on an odd closed walk.
bool bipartite_component(const Graph& g, VertexSet mask, int start, VertexSet& seen) {
  std::array<int, Graph::max_vertices> queue;
  std::array<int, Graph::max_vertices> color{};
  int head = 0, tail = 0;
  queue[tail++] = start;
  seen |= vertex_bit(start);
  color[start] = 0;
  while (head < tail) {
    int v = queue[head++];
    for (int w : bits_of(g.neighbors(v) & mask)) {
      if (!contains(seen, w)) {
        seen |= vertex_bit(w);
        color[w] = color[v] ^ 1;
        queue[tail++] = w;
      } else if (color[w] == color[v]) {
        return false;
      }
    }
  }
  return true;
}

struct BlockState {
  const Graph& g;
  VertexSet mask;
  std::array<int, Graph::max_vertices> disc{};
  std::array<int, Graph::max_vertices> low{};
  std::array<int, Graph::max_vertices> stack{};
  int sp = 0;
  int timer = 0;
  VertexSet on_cycle = 0;
  VertexSet on_odd = 0;

  void dfs(int v, int parent) {
    disc[v] = low[v] = ++timer;
    stack[sp++] = v;
    for (int w : bits_of(g.neighbors(v) & mask)) {
      if (disc[w] == 0) {
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          VertexSet block = vertex_bit(v);
          int u;
          do {
            u = stack[--sp];
            block |= vertex_bit(u);
          } while (u != w);
          close_block(block);
        }
      } else if (w != parent) {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  }

  void close_block(VertexSet block) {
    if (set_size(block) < 3) return;
    on_cycle |= block;
    VertexSet seen = 0;
    if (!bipartite_component(g, block, std::countr_zero(block), seen)) on_odd |= block;
  }
};

}  // namespace

CycleMembership cycle_membership(const Graph& g, VertexSet s) {
  s &= full_set(g.vertex_count());
  BlockState st{g, s};
  for (int v : bits_of(s))
    if (st.disc[v] == 0) st.dfs(v, -1);
  return {st.on_cycle, st.on_odd};
}

bool on_cycle(const Graph& g, VertexSet s, int v) {
  return contains(cycle_membership(g, s).on_cycle, v);
}

bool on_odd_cycle(const Graph& g, VertexSet s, int v) {
  return contains(cycle_membership(g, s).on_odd_cycle, v);
}

int count_components(const Graph& g, VertexSet s) {
  s &= full_set(g.vertex_count());
  VertexSet seen = 0;
  int components = 0;
  for (int v : bits_of(s)) {
    if (contains(seen, v)) continue;
    ++components;
    VertexSet frontier = vertex_bit(v);
    while (frontier) {
      seen |= frontier;
      VertexSet next = 0;
      for (int u : bits_of(frontier)) next |= g.neighbors(u) & s;
      frontier = next & ~seen;
    }
  }
  return components;
}

int induced_edge_count(const Graph& g, VertexSet s) {
  s &= full_set(g.vertex_count());
  int twice = 0;
  for (int v : bits_of(s)) twice += set_size(g.neighbors(v) & s);
  return twice / 2;
}

bool is_acyclic(const Graph& g, VertexSet s) {
  s &= full_set(g.vertex_count());
  return induced_edge_count(g, s) == set_size(s) - count_components(g, s);
}

bool is_bipartite(const Graph& g, VertexSet s) {
  s &= full_set(g.vertex_count());
  VertexSet seen = 0;
  for (int v : bits_of(s))
    if (!contains(seen, v) && !bipartite_component(g, s, v, seen)) return false;
  return true;
}

}  // namespace cyclechain
