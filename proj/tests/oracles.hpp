#pragma once

// Direct-from-definition reference implementations.  Everything here is
// deliberately naive; the suite trusts these and cross-checks the library
// against them on small graphs.

#include <algorithm>
#include <climits>
#include <vector>

#include "cyclechain/graph.hpp"
#include "cyclechain/predicates.hpp"

namespace oracle {

using cyclechain::bits_of;
using cyclechain::contains;
using cyclechain::CycleParity;
using cyclechain::Graph;
using cyclechain::PredicateKind;
using cyclechain::vertex_bit;
using cyclechain::VertexSet;

struct SimpleCycle {
  VertexSet vertices = 0;
  int length = 0;
};

// Every simple cycle of the subgraph induced by mask, each found once:
// the anchor is the cycle's smallest vertex and only one orientation
// closes.
inline std::vector<SimpleCycle> simple_cycles(const Graph& g, VertexSet mask) {
  std::vector<SimpleCycle> out;
  std::vector<int> path;
  auto extend = [&](auto&& self, VertexSet used) -> void {
    const int v0 = path.front();
    const int last = path.back();
    for (int x : bits_of(g.neighbors(last) & mask)) {
      if (x == v0 && path.size() >= 3) {
        if (path[1] < last) out.push_back({used, static_cast<int>(path.size())});
        continue;
      }
      if (x <= v0 || contains(used, x)) continue;
      path.push_back(x);
      self(self, used | vertex_bit(x));
      path.pop_back();
    }
  };
  for (int v0 : bits_of(mask)) {
    path.assign(1, v0);
    extend(extend, vertex_bit(v0));
  }
  return out;
}

inline bool has_cycle(const Graph& g, VertexSet mask, bool odd_only) {
  for (const auto& c : simple_cycles(g, mask))
    if (!odd_only || c.length % 2 == 1) return true;
  return false;
}

inline bool on_cycle(const Graph& g, VertexSet mask, int u, bool odd_only) {
  for (const auto& c : simple_cycles(g, mask))
    if (contains(c.vertices, u) && (!odd_only || c.length % 2 == 1)) return true;
  return false;
}

inline bool dominates(const Graph& g, CycleParity parity, VertexSet s, int u) {
  return on_cycle(g, s | vertex_bit(u), u, parity == CycleParity::odd);
}

inline bool is_member(const Graph& g, PredicateKind kind, VertexSet s) {
  const CycleParity parity = cyclechain::kind_parity(kind);
  const bool odd = parity == CycleParity::odd;
  const VertexSet outside = g.vertices() & ~s;
  switch (kind) {
    case PredicateKind::cycle_independent:
    case PredicateKind::odd_cycle_independent:
      return !has_cycle(g, s, odd);
    case PredicateKind::cycle_dominating:
    case PredicateKind::odd_cycle_dominating:
      for (int u : bits_of(outside))
        if (!oracle::dominates(g, parity, s, u)) return false;
      return true;
    default:
      break;
  }
  for (int u : bits_of(s)) {
    if (!on_cycle(g, s, u, odd)) continue;
    bool needed = false;
    for (int v : bits_of(outside)) {
      if (oracle::dominates(g, parity, s, v) &&
          !oracle::dominates(g, parity, s & ~vertex_bit(u), v)) {
        needed = true;
        break;
      }
    }
    if (!needed) return false;
  }
  return true;
}

inline std::vector<char> member_table(const Graph& g, PredicateKind kind) {
  const std::uint64_t size = std::uint64_t{1} << g.vertex_count();
  std::vector<char> t(size);
  for (VertexSet s = 0; s < size; ++s) t[s] = oracle::is_member(g, kind, s) ? 1 : 0;
  return t;
}

// maximal / minimal within the member family, by scanning every superset
// and subset
inline bool table_maximal(const std::vector<char>& t, int n, VertexSet s) {
  if (!t[s]) return false;
  const std::uint64_t size = std::uint64_t{1} << n;
  for (VertexSet u = s + 1; u < size; ++u)
    if ((u & s) == s && t[u]) return false;
  return true;
}

inline bool table_minimal(const std::vector<char>& t, VertexSet s) {
  if (!t[s]) return false;
  for (VertexSet u = 0; u < s; ++u)
    if ((u & s) == u && t[u]) return false;
  return true;
}

struct BruteValue {
  int value = 0;
  VertexSet witness = 0;
  bool found = false;
};

// Mirrors the solver's tie rule: ascending mask scan, strict improvement.
inline BruteValue scan(int n, bool want_min, const std::vector<char>& eligible) {
  const std::uint64_t size = std::uint64_t{1} << n;
  BruteValue best;
  for (VertexSet s = 0; s < size; ++s) {
    if (!eligible[s]) continue;
    const int sz = cyclechain::set_size(s);
    if (!best.found || (want_min ? sz < best.value : sz > best.value)) {
      best = {sz, s, true};
    }
  }
  return best;
}

struct BruteChain {
  BruteValue ir, gamma, i, beta, Gamma, IR;
};

inline BruteChain chain(const Graph& g, CycleParity parity) {
  const bool odd = parity == CycleParity::odd;
  const int n = g.vertex_count();
  const std::uint64_t size = std::uint64_t{1} << n;
  const auto ind = member_table(g, odd ? PredicateKind::odd_cycle_independent
                                       : PredicateKind::cycle_independent);
  const auto dom = member_table(g, odd ? PredicateKind::odd_cycle_dominating
                                       : PredicateKind::cycle_dominating);
  const auto irr = member_table(g, odd ? PredicateKind::odd_cycle_irredundant
                                       : PredicateKind::cycle_irredundant);
  std::vector<char> ind_max(size), dom_min(size), irr_max(size);
  for (VertexSet s = 0; s < size; ++s) {
    ind_max[s] = table_maximal(ind, n, s) ? 1 : 0;
    dom_min[s] = table_minimal(dom, s) ? 1 : 0;
    irr_max[s] = table_maximal(irr, n, s) ? 1 : 0;
  }
  BruteChain out;
  out.ir = scan(n, true, irr_max);
  out.gamma = scan(n, true, dom);
  out.i = scan(n, true, ind_max);
  out.beta = scan(n, false, ind);
  out.Gamma = scan(n, false, dom_min);
  out.IR = scan(n, false, irr);
  return out;
}

inline int girth(const Graph& g) {
  int best = INT_MAX;
  for (const auto& c : simple_cycles(g, g.vertices())) best = std::min(best, c.length);
  return best == INT_MAX ? 1 : best;
}

// maximum vertex-disjoint family drawn from ALL simple cycles
inline int max_disjoint_cycles(const Graph& g, bool odd_only) {
  const int n = g.vertex_count();
  std::vector<SimpleCycle> cycles;
  for (const auto& c : simple_cycles(g, g.vertices()))
    if (!odd_only || c.length % 2 == 1) cycles.push_back(c);
  std::vector<int> memo(std::uint64_t{1} << n, -1);
  auto rec = [&](auto&& self, VertexSet mask) -> int {
    if (mask == 0) return 0;
    int& m = memo[mask];
    if (m >= 0) return m;
    const int v = std::countr_zero(mask);
    int best = self(self, mask & ~vertex_bit(v));
    for (const auto& c : cycles)
      if (contains(c.vertices, v) && (c.vertices & mask) == c.vertices)
        best = std::max(best, 1 + self(self, mask & ~c.vertices));
    return m = best;
  };
  return rec(rec, g.vertices());
}

inline bool colorable(const Graph& g, VertexSet mask, int k) {
  std::vector<int> order;
  for (int v : bits_of(mask)) order.push_back(v);
  std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    const int v = order[i];
    for (int c = 0; c < k; ++c) {
      bool clash = false;
      for (int u : bits_of(g.neighbors(v) & mask))
        if (color[static_cast<std::size_t>(u)] == c) clash = true;
      if (clash) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (self(self, i + 1)) return true;
      color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

inline int chi(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  for (int k = 1;; ++k)
    if (colorable(g, g.vertices(), k)) return k;
}

inline int best_two_classes(const Graph& g) {
  const int x = chi(g);
  if (x <= 2) return g.vertex_count();
  const std::uint64_t size = std::uint64_t{1} << g.vertex_count();
  int best = 0;
  for (VertexSet s = 0; s < size; ++s)
    if (!has_cycle(g, s, true) && colorable(g, g.vertices() & ~s, x - 2))
      best = std::max(best, cyclechain::set_size(s));
  return best;
}

inline int components(const Graph& g, VertexSet mask) {
  int count = 0;
  VertexSet left = mask;
  while (left) {
    VertexSet frontier = vertex_bit(std::countr_zero(left));
    VertexSet seen = frontier;
    while (frontier) {
      VertexSet next = 0;
      for (int v : bits_of(frontier)) next |= g.neighbors(v) & mask;
      frontier = next & ~seen;
      seen |= next;
    }
    left &= ~seen;
    ++count;
  }
  return count;
}

inline int induced_edges(const Graph& g, VertexSet mask) {
  int twice = 0;
  for (int v : bits_of(mask)) twice += cyclechain::set_size(g.neighbors(v) & mask);
  return twice / 2;
}

inline int max_induced_tree(const Graph& g) {
  const std::uint64_t size = std::uint64_t{1} << g.vertex_count();
  int best = 0;
  for (VertexSet s = 1; s < size; ++s) {
    const int sz = cyclechain::set_size(s);
    if (components(g, s) == 1 && induced_edges(g, s) == sz - 1) best = std::max(best, sz);
  }
  return best;
}

inline int smallest_deletion(const Graph& g, bool odd_only) {
  const std::uint64_t size = std::uint64_t{1} << g.vertex_count();
  int best = g.vertex_count();
  for (VertexSet d = 0; d < size; ++d)
    if (!has_cycle(g, g.vertices() & ~d, odd_only))
      best = std::min(best, cyclechain::set_size(d));
  return best;
}

inline int k_tuple_domination(const Graph& g, int k) {
  const std::uint64_t size = std::uint64_t{1} << g.vertex_count();
  int best = g.vertex_count();
  for (VertexSet s = 0; s < size; ++s) {
    bool ok = true;
    for (int u : bits_of(g.vertices() & ~s))
      if (cyclechain::set_size(g.neighbors(u) & s) < k) ok = false;
    if (ok) best = std::min(best, cyclechain::set_size(s));
  }
  return best;
}

}  // namespace oracle
