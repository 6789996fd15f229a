#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "cyclechain/graph.hpp"

namespace cyclechain {

// Construction-time knowledge about a graph, attached by generators or
// asserted by the caller for file inputs.  Checks with a structural
// hypothesis only fire when the matching flag is set.
struct FamilyFlags {
  bool planar = false;
  bool maximal_outerplanar = false;
  bool bipartite_known = false;

  bool operator==(const FamilyFlags&) const = default;
};

enum class Family {
  path,
  cycle,
  complete,
  fan,
  double_star,
  subdivided_double_star,
  sun,
  mop_random,
  gnp,
  all_labeled,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);  // throws input_error

struct FamilySpec {
  Family family = Family::path;
  int n = 0;
  int subdivisions = 0;       // subdivided_double_star: internal path length
  int pendant = 0;            // subdivided_double_star: pendant path length
  double p = 0.5;             // gnp edge probability
  long long count = 1;        // gnp / mop_random: graphs to draw
  std::uint64_t seed = 0;     // gnp / mop_random base seed
};

FamilyFlags family_flags(const FamilySpec& spec);

// All constructors throw input_error on out-of-range parameters.
Graph make_path(int n);
Graph make_cycle(int n);      // n >= 3
Graph make_complete(int n);
Graph make_fan(int n);        // n >= 3: hub 0 joined to the path 1..n-1

// Two adjacent hubs 0, 1; satellites 2..n+1 adjacent to both hubs.
Graph make_double_star(int n);  // n >= 1

// Hubs 0, 1 joined by a path with s internal vertices (s = 0 keeps the
// hub edge), n satellites adjacent to both hubs, and, when pendant > 0,
// a pendant path of that many edges rooted at every base vertex.
Graph make_subdivided_double_star(int n, int s, int pendant);

// Hexagon 0..5 with the inner triangle {1, 3, 5} completed.
Graph make_sun();

// Random maximal outerplanar graph: a fan for n <= 3, otherwise a
// uniform recursive ear split of the polygon triangulation.
Graph make_mop_random(int n, std::uint64_t seed);

// Erdos-Renyi draw; edges examined in lexicographic (i, j) order.
Graph make_gnp(int n, double p, std::uint64_t seed);

// The labeled graph whose edge set is the binary expansion of index
// over the pairs (0,1), (0,2), (1,2), (0,3), ...
Graph make_all_labeled(int n, std::uint64_t index);

// Random-access view of one family's graph sequence: at(i) depends only
// on the descriptor, so streams can be split across workers deterministically.
class GraphStream {
 public:
  explicit GraphStream(FamilySpec spec);

  long long size() const { return size_; }
  Graph at(long long index) const;
  FamilyFlags flags() const { return flags_; }
  const FamilySpec& spec() const { return spec_; }

  std::optional<Graph> next();

 private:
  FamilySpec spec_;
  FamilyFlags flags_;
  long long size_ = 0;
  long long pos_ = 0;
};

// Color class sizes of the proper 3-coloring of a maximal outerplanar
// graph on >= 3 vertices (unique up to renaming), descending.
std::array<int, 3> unique_mop_coloring(const Graph& g);

std::uint64_t splitmix64(std::uint64_t x);

// Seeded helper; bounded draws use rejection so every platform sees the
// same stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  std::uint64_t next_below(std::uint64_t bound);
  double next_unit();

 private:
  std::mt19937_64 engine_;
};

}  // namespace cyclechain
