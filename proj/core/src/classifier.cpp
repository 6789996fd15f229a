#include "cyclechain/classifier.hpp"

#include "cyclechain/cycles.hpp"
#include "cyclechain/errors.hpp"

namespace cyclechain {

namespace {

void set_bit(std::vector<std::uint64_t>& t, std::uint64_t s) { t[s >> 6] |= std::uint64_t{1} << (s & 63); }
bool get_bit(const std::vector<std::uint64_t>& t, std::uint64_t s) { return (t[s >> 6] >> (s & 63)) & 1; }

}  // namespace

SubsetClassifier SubsetClassifier::build(const Graph& g, const SolverOptions& opt) {
  const int n = g.vertex_count();
  opt.validate(n);
  SubsetClassifier c;
  c.n_ = n;
  const std::uint64_t size = std::uint64_t{1} << n;
  const std::size_t words = static_cast<std::size_t>(size >= 64 ? size >> 6 : 1);
  const VertexSet full = full_set(n);

  c.on_cycle_.resize(static_cast<std::size_t>(size));
  c.on_odd_cycle_.resize(static_cast<std::size_t>(size));
  for (auto& table : c.member_) table.assign(words, 0);
  for (auto& table : c.maximal_) table.assign(words, 0);
  for (auto& table : c.minimal_) table.assign(words, 0);

  {
    // dom[s] collects the outside vertices u lying on a cycle of <s + u>,
    // discovered while visiting the superset s | {u}.
    std::vector<std::uint32_t> dom_cy(static_cast<std::size_t>(size), 0);
    std::vector<std::uint32_t> dom_odd(static_cast<std::size_t>(size), 0);
    for (std::uint64_t s = 0; s < size; ++s) {
      const CycleMembership cm = cycle_membership(g, s);
      c.on_cycle_[s] = static_cast<std::uint32_t>(cm.on_cycle);
      c.on_odd_cycle_[s] = static_cast<std::uint32_t>(cm.on_odd_cycle);
      for (int u : bits_of(s & cm.on_cycle)) dom_cy[s ^ vertex_bit(u)] |= std::uint32_t{1} << u;
      for (int u : bits_of(s & cm.on_odd_cycle)) dom_odd[s ^ vertex_bit(u)] |= std::uint32_t{1} << u;
    }

    auto& m_ci = c.member_[idx(PredicateKind::cycle_independent)];
    auto& m_cd = c.member_[idx(PredicateKind::cycle_dominating)];
    auto& m_cir = c.member_[idx(PredicateKind::cycle_irredundant)];
    auto& m_oci = c.member_[idx(PredicateKind::odd_cycle_independent)];
    auto& m_ocd = c.member_[idx(PredicateKind::odd_cycle_dominating)];
    auto& m_ocir = c.member_[idx(PredicateKind::odd_cycle_irredundant)];
    for (std::uint64_t s = 0; s < size; ++s) {
      const std::uint32_t outside = static_cast<std::uint32_t>(full & ~s);
      if (c.on_cycle_[s] == 0) set_bit(m_ci, s);
      if (c.on_odd_cycle_[s] == 0) set_bit(m_oci, s);
      if (dom_cy[s] == outside) set_bit(m_cd, s);
      if (dom_odd[s] == outside) set_bit(m_ocd, s);
      // members on a cycle of <s> need a private outside vertex; the
      // member's own bit inside dom[s less u] never matches dom[s]
      bool cir = true;
      for (int u : bits_of(s & c.on_cycle_[s])) {
        if ((dom_cy[s] & ~dom_cy[s ^ vertex_bit(u)]) == 0) {
          cir = false;
          break;
        }
      }
      if (cir) set_bit(m_cir, s);
      bool ocir = true;
      for (int u : bits_of(s & c.on_odd_cycle_[s])) {
        if ((dom_odd[s] & ~dom_odd[s ^ vertex_bit(u)]) == 0) {
          ocir = false;
          break;
        }
      }
      if (ocir) set_bit(m_ocir, s);
    }
  }

  for (std::size_t k = 0; k < 6; ++k) {
    const auto& mem = c.member_[k];
    std::vector<std::uint64_t> above(words, 0);  // some proper superset is a member
    for (std::uint64_t s = size; s-- > 0;) {
      bool hit = false;
      for (int v : bits_of(full & ~s)) {
        const std::uint64_t t = s | vertex_bit(v);
        if (get_bit(mem, t) || get_bit(above, t)) {
          hit = true;
          break;
        }
      }
      if (hit)
        set_bit(above, s);
      else if (get_bit(mem, s))
        set_bit(c.maximal_[k], s);
    }
    std::vector<std::uint64_t> below(words, 0);  // some proper subset is a member
    for (std::uint64_t s = 0; s < size; ++s) {
      bool hit = false;
      for (int v : bits_of(s)) {
        const std::uint64_t t = s & ~vertex_bit(v);
        if (get_bit(mem, t) || get_bit(below, t)) {
          hit = true;
          break;
        }
      }
      if (hit)
        set_bit(below, s);
      else if (get_bit(mem, s))
        set_bit(c.minimal_[k], s);
    }
  }
  return c;
}

}  // namespace cyclechain
