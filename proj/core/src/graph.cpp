#include "cyclechain/graph.hpp"

#include <algorithm>

#include "cyclechain/errors.hpp"

namespace cyclechain {

std::vector<int> set_to_vertices(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  for (int v : bits_of(s)) out.push_back(v);
  return out;
}

VertexSet vertices_to_set(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) {
    if (v < 0 || v >= Graph::max_vertices) throw input_error("vertex out of range: " + std::to_string(v));
    s |= vertex_bit(v);
  }
  return s;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges, std::string label) {
  if (n < 0 || n > max_vertices)
    throw input_error("vertex count out of range: " + std::to_string(n));
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), 0);
  g.label_ = std::move(label);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n) throw input_error("vertex out of range: " + std::to_string(u));
    if (v < 0 || v >= n) throw input_error("vertex out of range: " + std::to_string(v));
    if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)] |= vertex_bit(v);
    g.adj_[static_cast<std::size_t>(v)] |= vertex_bit(u);
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : bits_of(neighbors(u) & ~full_set(u + 1))) out.emplace_back(u, v);
  return out;
}

}  // namespace cyclechain
