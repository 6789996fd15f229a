#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cyclechain {

// Bitmask over the vertices [0, n) of an associated Graph.
using VertexSet = std::uint64_t;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

// Mask with the n lowest bits set.
constexpr VertexSet full_set(int n) {
  if (n <= 0) return 0;
  if (n >= 64) return ~VertexSet{0};
  return (VertexSet{1} << n) - 1;
}

constexpr int set_size(VertexSet s) { return std::popcount(s); }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1; }

// range-for over the set bits of a mask, lowest first
struct BitIterator {
  VertexSet rest;
  int operator*() const { return std::countr_zero(rest); }
  BitIterator& operator++() {
    rest &= rest - 1;
    return *this;
  }
  bool operator!=(const BitIterator& o) const { return rest != o.rest; }
};
struct BitRange {
  VertexSet mask;
  BitIterator begin() const { return {mask}; }
  BitIterator end() const { return {0}; }
};
constexpr BitRange bits_of(VertexSet s) { return {s}; }

std::vector<int> set_to_vertices(VertexSet s);
VertexSet vertices_to_set(const std::vector<int>& vs);

// Immutable simple undirected graph on at most 64 labeled vertices,
// adjacency stored as one VertexSet row per vertex.
class Graph {
 public:
  static constexpr int max_vertices = 64;

  Graph() = default;

  // Throws input_error on n out of range, vertex out of range or self-loop.
  // Duplicate edges are collapsed.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                          std::string label = {});

  int vertex_count() const { return n_; }
  VertexSet vertices() const { return full_set(n_); }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const { return contains(adj_[static_cast<std::size_t>(u)], v); }
  int degree(int v) const { return set_size(neighbors(v)); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  const std::string& label() const { return label_; }

  // structural equality; labels are ignored
  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::string label_;
};

}  // namespace cyclechain
