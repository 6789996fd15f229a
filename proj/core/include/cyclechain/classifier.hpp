#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "cyclechain/graph.hpp"
#include "cyclechain/invariants.hpp"
#include "cyclechain/predicates.hpp"

namespace cyclechain {

// Bit tables over all 2^n vertex subsets: for each of the six predicate
// kinds, membership plus maximality and minimality within the member
// family.  Built once per graph; queries are O(1).
//
// Build is O(2^n * n * alpha) time and 2^n / 8 bytes per stored table
// (18 tables), plus two transient 4-byte arrays per subset.
class SubsetClassifier {
 public:
  // Throws resource_error when n exceeds opt.cap.
  static SubsetClassifier build(const Graph& g, const SolverOptions& opt = {});

  bool member(PredicateKind kind, VertexSet s) const {
    return get(member_[idx(kind)], s);
  }
  // maximal within the family: member with no proper member superset
  bool maximal_member(PredicateKind kind, VertexSet s) const {
    return get(maximal_[idx(kind)], s);
  }
  // minimal within the family: member with no proper member subset
  bool minimal_member(PredicateKind kind, VertexSet s) const {
    return get(minimal_[idx(kind)], s);
  }

  VertexSet on_cycle_mask(VertexSet s) const { return on_cycle_[s]; }
  VertexSet on_odd_cycle_mask(VertexSet s) const { return on_odd_cycle_[s]; }

  int vertex_count() const { return n_; }

 private:
  using BitTable = std::vector<std::uint64_t>;

  static constexpr std::size_t idx(PredicateKind k) { return static_cast<std::size_t>(k); }
  static bool get(const BitTable& t, VertexSet s) {
    return (t[s >> 6] >> (s & 63)) & 1;
  }

  int n_ = 0;
  std::array<BitTable, 6> member_;
  std::array<BitTable, 6> maximal_;
  std::array<BitTable, 6> minimal_;
  std::vector<std::uint32_t> on_cycle_;
  std::vector<std::uint32_t> on_odd_cycle_;
};

}  // namespace cyclechain
