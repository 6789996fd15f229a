#include "cyclechain/families.hpp"

#include <algorithm>

#include "cyclechain/errors.hpp"

namespace cyclechain {

std::string family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::fan: return "fan";
    case Family::double_star: return "double_star";
    case Family::subdivided_double_star: return "subdivided_double_star";
    case Family::sun: return "sun";
    case Family::mop_random: return "mop_random";
    case Family::gnp: return "gnp";
    case Family::all_labeled: return "all_labeled";
  }
  return "unknown";
}

Family family_from_name(const std::string& name) {
  static const std::pair<const char*, Family> table[] = {
      {"path", Family::path},
      {"cycle", Family::cycle},
      {"complete", Family::complete},
      {"fan", Family::fan},
      {"double_star", Family::double_star},
      {"subdivided_double_star", Family::subdivided_double_star},
      {"sun", Family::sun},
      {"mop_random", Family::mop_random},
      {"gnp", Family::gnp},
      {"all_labeled", Family::all_labeled},
  };
  for (const auto& [key, value] : table)
    if (name == key) return value;
  throw input_error("unknown family: " + name);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % bound;
}

double Rng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
}

Graph make_path(int n) {
  if (n < 0) throw input_error("path needs n >= 0");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges, "path(" + std::to_string(n) + ")");
}

Graph make_cycle(int n) {
  if (n < 3) throw input_error("cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph::from_edges(n, edges, "cycle(" + std::to_string(n) + ")");
}

Graph make_complete(int n) {
  if (n < 0 || n > Graph::max_vertices) throw input_error("complete needs 0 <= n <= 64");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges, "complete(" + std::to_string(n) + ")");
}

Graph make_fan(int n) {
  if (n < 3) throw input_error("fan needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  for (int i = 1; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges, "fan(" + std::to_string(n) + ")");
}

Graph make_double_star(int n) {
  if (n < 1) throw input_error("double_star needs n >= 1");
  if (n + 2 > Graph::max_vertices) throw input_error("double_star too large");
  std::vector<std::pair<int, int>> edges{{0, 1}};
  for (int i = 2; i < n + 2; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(1, i);
  }
  return Graph::from_edges(n + 2, edges, "double_star(" + std::to_string(n) + ")");
}

Graph make_subdivided_double_star(int n, int s, int pendant) {
  if (n < 1) throw input_error("subdivided_double_star needs n >= 1");
  if (s < 0 || pendant < 0) throw input_error("subdivided_double_star needs s, pendant >= 0");
  const int base = n + s + 2;
  const long long total = static_cast<long long>(base) * (1 + pendant);
  if (total > Graph::max_vertices) throw input_error("subdivided_double_star too large");
  std::vector<std::pair<int, int>> edges;
  if (s == 0) {
    edges.emplace_back(0, 1);
  } else {
    edges.emplace_back(0, 2);
    for (int i = 2; i < s + 1; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(s + 1, 1);
  }
  for (int i = s + 2; i < base; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(1, i);
  }
  int next = base;
  for (int b = 0; b < base; ++b) {
    int tail = b;
    for (int k = 0; k < pendant; ++k) {
      edges.emplace_back(tail, next);
      tail = next++;
    }
  }
  return Graph::from_edges(static_cast<int>(total), edges,
                           "subdivided_double_star(" + std::to_string(n) + "," + std::to_string(s) +
                               "," + std::to_string(pendant) + ")");
}

Graph make_sun() {
  const std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                                                  {0, 5}, {1, 3}, {1, 5}, {3, 5}};
  return Graph::from_edges(6, edges, "sun");
}

Graph make_mop_random(int n, std::uint64_t seed) {
  if (n < 3) throw input_error("mop_random needs n >= 3");
  if (n > Graph::max_vertices) throw input_error("mop_random too large");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  Rng rng(seed);
  auto split = [&](auto&& self, int lo, int hi) -> void {
    if (hi - lo < 2) return;
    const int k = lo + 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(hi - lo - 1)));
    if (k - lo >= 2) edges.emplace_back(lo, k);
    if (hi - k >= 2) edges.emplace_back(k, hi);
    self(self, lo, k);
    self(self, k, hi);
  };
  split(split, 0, n - 1);
  return Graph::from_edges(n, edges, "mop_random(" + std::to_string(n) + ")");
}

Graph make_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0 || n > Graph::max_vertices) throw input_error("gnp needs 0 <= n <= 64");
  if (!(p >= 0.0 && p <= 1.0)) throw input_error("gnp needs p in [0, 1]");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next_unit() < p) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges, "gnp(" + std::to_string(n) + ")");
}

Graph make_all_labeled(int n, std::uint64_t index) {
  if (n < 0 || n > 8) throw input_error("all_labeled needs 0 <= n <= 8");
  const int pairs = n * (n - 1) / 2;
  if (pairs < 64 && index >= (std::uint64_t{1} << pairs)) throw input_error("all_labeled index out of range");
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((index >> bit) & 1) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges, "all_labeled(" + std::to_string(n) + ")#" + std::to_string(index));
}

FamilyFlags family_flags(const FamilySpec& spec) {
  FamilyFlags f;
  switch (spec.family) {
    case Family::path:
      f.planar = true;
      f.bipartite_known = true;
      break;
    case Family::cycle:
      f.planar = true;
      f.bipartite_known = spec.n % 2 == 0;
      break;
    case Family::complete:
      f.planar = spec.n <= 4;
      f.maximal_outerplanar = spec.n == 3;
      f.bipartite_known = spec.n <= 2;
      break;
    case Family::fan:
    case Family::mop_random:
      f.planar = true;
      f.maximal_outerplanar = true;
      break;
    case Family::double_star:
      f.planar = true;
      f.maximal_outerplanar = spec.n == 1;
      break;
    case Family::subdivided_double_star:
      f.planar = true;
      f.bipartite_known = spec.subdivisions % 2 == 1;
      break;
    case Family::sun:
      f.planar = true;
      f.maximal_outerplanar = true;
      break;
    case Family::gnp:
    case Family::all_labeled:
      break;
  }
  return f;
}

GraphStream::GraphStream(FamilySpec spec) : spec_(spec), flags_(family_flags(spec)) {
  switch (spec_.family) {
    case Family::gnp:
    case Family::mop_random:
      if (spec_.count < 1) throw input_error("count must be positive");
      size_ = spec_.count;
      break;
    case Family::all_labeled: {
      if (spec_.n < 0 || spec_.n > 8) throw input_error("all_labeled needs 0 <= n <= 8");
      size_ = 1LL << (spec_.n * (spec_.n - 1) / 2);
      break;
    }
    default:
      size_ = 1;
      break;
  }
  at(0);  // surface parameter errors at construction
}

Graph GraphStream::at(long long index) const {
  if (index < 0 || index >= size_) throw input_error("stream index out of range");
  const std::uint64_t draw_seed = splitmix64(spec_.seed ^ splitmix64(static_cast<std::uint64_t>(index)));
  switch (spec_.family) {
    case Family::path: return make_path(spec_.n);
    case Family::cycle: return make_cycle(spec_.n);
    case Family::complete: return make_complete(spec_.n);
    case Family::fan: return make_fan(spec_.n);
    case Family::double_star: return make_double_star(spec_.n);
    case Family::subdivided_double_star:
      return make_subdivided_double_star(spec_.n, spec_.subdivisions, spec_.pendant);
    case Family::sun: return make_sun();
    case Family::mop_random: return make_mop_random(spec_.n, draw_seed);
    case Family::gnp: return make_gnp(spec_.n, spec_.p, draw_seed);
    case Family::all_labeled: return make_all_labeled(spec_.n, static_cast<std::uint64_t>(index));
  }
  throw input_error("unknown family");
}

std::optional<Graph> GraphStream::next() {
  if (pos_ >= size_) return std::nullopt;
  return at(pos_++);
}

std::array<int, 3> unique_mop_coloring(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3) throw input_error("maximal outerplanar coloring needs n >= 3");
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
  VertexSet alive = g.vertices();
  std::vector<int> ears;
  while (set_size(alive) > 3) {
    int ear = -1;
    for (int v : bits_of(alive)) {
      const VertexSet nb = adj[static_cast<std::size_t>(v)] & alive;
      if (set_size(nb) != 2) continue;
      const int a = std::countr_zero(nb);
      const int b = std::countr_zero(nb & (nb - 1));
      if (g.has_edge(a, b)) {
        ear = v;
        break;
      }
    }
    if (ear < 0) throw std::logic_error("graph is not maximal outerplanar");
    ears.push_back(ear);
    alive &= ~vertex_bit(ear);
  }
  std::array<int, Graph::max_vertices> color{};
  color.fill(-1);
  {
    const int a = std::countr_zero(alive);
    VertexSet rest = alive & (alive - 1);
    const int b = std::countr_zero(rest);
    const int c = std::countr_zero(rest & (rest - 1));
    if (!g.has_edge(a, b) || !g.has_edge(a, c) || !g.has_edge(b, c))
      throw std::logic_error("graph is not maximal outerplanar");
    color[a] = 0;
    color[b] = 1;
    color[c] = 2;
  }
  for (auto it = ears.rbegin(); it != ears.rend(); ++it) {
    alive |= vertex_bit(*it);
    const VertexSet nb = adj[static_cast<std::size_t>(*it)] & alive & ~vertex_bit(*it);
    const int a = std::countr_zero(nb);
    const int b = std::countr_zero(nb & (nb - 1));
    color[*it] = 3 - color[a] - color[b];
  }
  std::array<int, 3> sizes{};
  for (int v = 0; v < n; ++v) ++sizes[static_cast<std::size_t>(color[v])];
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

}  // namespace cyclechain
