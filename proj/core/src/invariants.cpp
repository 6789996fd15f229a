#include "cyclechain/invariants.hpp"

#include <algorithm>
#include <array>

#include "cyclechain/cycles.hpp"
#include "cyclechain/errors.hpp"

namespace cyclechain {

void SolverOptions::validate(int n) const {
  if (cap < 0 || hard_cap < 0) throw input_error("negative subset cap");
  if (max_chordless_cycles <= 0) throw input_error("nonpositive chordless cycle limit");
  const int limit = std::min(cap, hard_cap);
  if (n > limit)
    throw resource_error("graph on " + std::to_string(n) + " vertices exceeds the cap of " +
                         std::to_string(limit));
}

int girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = -1;
  std::array<int, Graph::max_vertices> dist{};
  std::array<int, Graph::max_vertices> parent{};
  std::array<int, Graph::max_vertices> queue{};
  for (int r = 0; r < n; ++r) {
    dist.fill(-1);
    int head = 0, tail = 0;
    dist[r] = 0;
    parent[r] = -1;
    queue[tail++] = r;
    while (head < tail) {
      int u = queue[head++];
      for (int v : bits_of(g.neighbors(u))) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue[tail++] = v;
        } else if (v != parent[u]) {
          int len = dist[u] + dist[v] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  return best < 0 ? 1 : best;
}

KappaResult kappa(const Graph& g) {
  const VertexSet off = g.vertices() & ~cycle_membership(g, g.vertices()).on_cycle;
  return {off, set_size(off)};
}

KappaResult kappa_odd(const Graph& g) {
  const VertexSet off = g.vertices() & ~cycle_membership(g, g.vertices()).on_odd_cycle;
  return {off, set_size(off)};
}

namespace {

struct CycleSearch {
  const Graph& g;
  bool odd_only;
  long long limit;
  std::vector<VertexSet> out;
  std::array<int, Graph::max_vertices> path{};
  int depth = 0;
  VertexSet mask = 0;

  // Grows induced paths from the anchor path[0], all later vertices larger
  // than the anchor; a candidate adjacent only to the path's two ends
  // closes a chordless cycle.
  void extend() {
    const int v0 = path[0];
    const int last = path[depth - 1];
    for (int x : bits_of(g.neighbors(last) & ~full_set(v0 + 1) & ~mask)) {
      const VertexSet chords = g.neighbors(x) & mask & ~vertex_bit(last);
      if (depth == 1) {
        grow(x);
      } else if (chords == vertex_bit(v0)) {
        if (path[1] < x && (!odd_only || (depth + 1) % 2 == 1)) {
          if (static_cast<long long>(out.size()) >= limit)
            throw resource_error("chordless cycle count exceeds the configured limit");
          out.push_back(mask | vertex_bit(x));
        }
      } else if (chords == 0) {
        grow(x);
      }
    }
  }

  void grow(int x) {
    path[depth++] = x;
    mask |= vertex_bit(x);
    extend();
    mask &= ~vertex_bit(x);
    --depth;
  }
};

PackingResult pack_disjoint(int n, const std::vector<VertexSet>& cycles) {
  std::vector<VertexSet> order = cycles;
  std::sort(order.begin(), order.end(), [](VertexSet a, VertexSet b) {
    const int pa = set_size(a), pb = set_size(b);
    return pa != pb ? pa < pb : a < b;
  });
  PackingResult best;
  std::vector<VertexSet> chosen;
  const int m = static_cast<int>(order.size());

  auto rec = [&](auto&& self, int idx, VertexSet used) -> void {
    const int count = static_cast<int>(chosen.size());
    if (count > best.value) {
      best.value = count;
      best.cycles = chosen;
    }
    if (count + (n - set_size(used)) / 3 <= best.value) return;
    for (int i = idx; i < m; ++i) {
      if (count + (m - i) <= best.value) break;
      if (order[i] & used) continue;
      chosen.push_back(order[i]);
      self(self, i + 1, used | order[i]);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0);
  return best;
}

bool colorable_rec(const Graph& g, VertexSet s, std::array<int, Graph::max_vertices>& color,
                   VertexSet uncolored, int k, int used) {
  if (uncolored == 0) return true;
  int pick = -1, pick_sat = -1, pick_deg = -1;
  for (int v : bits_of(uncolored)) {
    VertexSet seen_colors = 0;
    for (int u : bits_of(g.neighbors(v) & s & ~uncolored)) seen_colors |= VertexSet{1} << color[u];
    const int sat = set_size(seen_colors);
    const int deg = set_size(g.neighbors(v) & uncolored);
    if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
      pick = v;
      pick_sat = sat;
      pick_deg = deg;
    }
  }
  VertexSet banned = 0;
  for (int u : bits_of(g.neighbors(pick) & s & ~uncolored)) banned |= VertexSet{1} << color[u];
  const int tryable = std::min(k, used + 1);  // a fresh color needs no symmetry sweep
  for (int c = 0; c < tryable; ++c) {
    if ((banned >> c) & 1) continue;
    color[pick] = c;
    if (colorable_rec(g, s, color, uncolored & ~vertex_bit(pick), k, std::max(used, c + 1)))
      return true;
  }
  return false;
}

bool is_k_colorable(const Graph& g, VertexSet s, int k) {
  if (s == 0) return true;
  if (k <= 0) return false;
  std::array<int, Graph::max_vertices> color{};
  return colorable_rec(g, s, color, s, k, 0);
}

int greedy_clique_bound(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    VertexSet cand = g.neighbors(v);
    int size = 1;
    while (cand) {
      int pick = -1, pick_deg = -1;
      for (int u : bits_of(cand)) {
        const int deg = set_size(g.neighbors(u) & cand);
        if (deg > pick_deg) {
          pick = u;
          pick_deg = deg;
        }
      }
      ++size;
      cand &= g.neighbors(pick);
    }
    best = std::max(best, size);
  }
  return best;
}

// Gosper's hack: next mask with the same popcount, within n bits.
bool next_same_size(VertexSet& s, int n) {
  if (s == 0) return false;
  const VertexSet c = s & -s;
  const VertexSet r = s + c;
  s = (((r ^ s) >> 2) / c) | r;
  return s < (VertexSet{1} << n);
}

}  // namespace

std::vector<VertexSet> chordless_cycles(const Graph& g, bool odd_only, const SolverOptions& opt) {
  if (opt.max_chordless_cycles <= 0) throw input_error("nonpositive chordless cycle limit");
  CycleSearch search{g, odd_only, opt.max_chordless_cycles, {}};
  for (int v0 = 0; v0 < g.vertex_count(); ++v0) {
    search.path[0] = v0;
    search.depth = 1;
    search.mask = vertex_bit(v0);
    search.extend();
  }
  return std::move(search.out);
}

PackingResult max_cycle_packing(const Graph& g, const SolverOptions& opt) {
  return pack_disjoint(g.vertex_count(), chordless_cycles(g, false, opt));
}

PackingResult max_odd_cycle_packing(const Graph& g, const SolverOptions& opt) {
  return pack_disjoint(g.vertex_count(), chordless_cycles(g, true, opt));
}

ChromaticData chromatic_data(const Graph& g, const SolverOptions& opt) {
  (void)opt;
  const int n = g.vertex_count();
  ChromaticData out;
  if (n == 0) return out;
  if (g.edge_count() == 0) {
    out.chi = 1;
  } else if (is_bipartite(g, g.vertices())) {
    out.chi = 2;
  } else {
    int k = std::max(3, greedy_clique_bound(g));
    while (!is_k_colorable(g, g.vertices(), k)) ++k;
    out.chi = k;
  }
  if (out.chi <= 2) {
    out.best_two_classes = n;
    out.best_two_witness = g.vertices();
    return out;
  }
  for (int size = n; size >= 0; --size) {
    VertexSet s = full_set(size);
    do {
      if (is_bipartite(g, s) && is_k_colorable(g, g.vertices() & ~s, out.chi - 2)) {
        out.best_two_classes = size;
        out.best_two_witness = s;
        return out;
      }
    } while (next_same_size(s, n));
  }
  return out;
}

SetResult max_induced_tree(const Graph& g, const SolverOptions& opt) {
  (void)opt;
  const int n = g.vertex_count();
  for (int size = n; size >= 1; --size) {
    VertexSet s = full_set(size);
    do {
      if (count_components(g, s) == 1 && induced_edge_count(g, s) == size - 1)
        return {size, s};
    } while (next_same_size(s, n));
  }
  return {0, 0};
}

SetResult k_tuple_domination(const Graph& g, int k, const SolverOptions& opt) {
  (void)opt;
  if (k < 1) throw input_error("k-tuple domination needs k >= 1");
  const int n = g.vertex_count();
  for (int size = 0; size <= n; ++size) {
    VertexSet s = full_set(size);
    do {
      bool ok = true;
      for (int u : bits_of(g.vertices() & ~s)) {
        if (set_size(g.neighbors(u) & s) < k) {
          ok = false;
          break;
        }
      }
      if (ok) return {size, s};
    } while (size > 0 && next_same_size(s, n));
  }
  return {n, g.vertices()};
}

namespace {

template <typename Pred>
SetResult smallest_deletion(const Graph& g, Pred clean) {
  const int n = g.vertex_count();
  for (int size = 0; size <= n; ++size) {
    VertexSet d = full_set(size);
    do {
      if (clean(g.vertices() & ~d)) return {size, d};
    } while (size > 0 && next_same_size(d, n));
  }
  return {n, g.vertices()};
}

}  // namespace

SetResult decycling_number(const Graph& g, const SolverOptions& opt) {
  (void)opt;
  return smallest_deletion(g, [&](VertexSet rest) { return is_acyclic(g, rest); });
}

SetResult odd_cycle_cover_number(const Graph& g, const SolverOptions& opt) {
  (void)opt;
  return smallest_deletion(g, [&](VertexSet rest) { return is_bipartite(g, rest); });
}

InvariantBundle compute_invariants(const Graph& g, const SolverOptions& opt) {
  opt.validate(g.vertex_count());
  InvariantBundle b;
  b.girth = girth(g);
  const KappaResult ka = kappa(g);
  const KappaResult ko = kappa_odd(g);
  b.kappa = ka.value;
  b.kappa_set = ka.support;
  b.kappa_odd = ko.value;
  b.kappa_odd_set = ko.support;
  PackingResult pa = max_cycle_packing(g, opt);
  PackingResult po = max_odd_cycle_packing(g, opt);
  b.tau = pa.value;
  b.tau_packing = std::move(pa.cycles);
  b.tau_odd = po.value;
  b.tau_odd_packing = std::move(po.cycles);
  const ChromaticData cd = chromatic_data(g, opt);
  b.chi = cd.chi;
  b.best_two_classes = cd.best_two_classes;
  b.best_two_set = cd.best_two_witness;
  const SetResult tree = max_induced_tree(g, opt);
  b.t = tree.value;
  b.t_set = tree.witness;
  const SetResult g2 = k_tuple_domination(g, 2, opt);
  b.gamma2 = g2.value;
  b.gamma2_set = g2.witness;
  const SetResult dc = decycling_number(g, opt);
  b.nabla = dc.value;
  b.nabla_set = dc.witness;
  const SetResult oc = odd_cycle_cover_number(g, opt);
  b.tau_cover = oc.value;
  b.tau_cover_set = oc.witness;
  return b;
}

}  // namespace cyclechain
