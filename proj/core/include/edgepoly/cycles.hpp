#ifndef EDGEPOLY_CYCLES_HPP
#define EDGEPOLY_CYCLES_HPP

#include <optional>
#include <vector>

#include "edgepoly/bitset.hpp"
#include "edgepoly/graph.hpp"

namespace edgepoly {

/// Bitset over vertex labels, for fast disjointness tests.
using VertexSet = DynBitset;

/// Simple cycle of odd length in canonical form: minimal vertex first,
/// second vertex the smaller of its two neighbors on the cycle.
struct OddCycle {
  std::vector<int> vertices;  // cyclic order, canonical
  std::vector<int> edges;     // 0-based edge indices, traversal order
  VertexSet vset;

  int length() const { return static_cast<int>(vertices.size()); }
};

struct EnumerationOptions {
  int max_length = 0;             // 0 means vertex count of the graph
  long long budget = 1'000'000;   // cap on enumerated cycles
  bool chordless_only = false;    // experimentation flag; default per paper
};

/// All simple odd cycles of length <= max_length, canonical, sorted by
/// vertex sequence. Throws EnumerationBudgetExceeded past the cap.
std::vector<OddCycle> enumerate_odd_cycles(const Graph& g,
                                           const EnumerationOptions& opts = {});

/// Unordered pair of vertex-disjoint odd cycles, as indices into the
/// enumerated cycle list with first < second.
struct DisjointPair {
  int first = 0;
  int second = 0;

  friend bool operator==(const DisjointPair&, const DisjointPair&) = default;
};

/// All vertex-disjoint pairs, deduplicated, sorted by (first, second).
std::vector<DisjointPair> enumerate_disjoint_pairs(
    const Graph& g, const std::vector<OddCycle>& cycles);

enum class GraphClass {
  NotFHM,          // some disjoint pair has no bridge
  FHMNoPair,       // no disjoint pair at all
  FundamentalFHM,  // every pair bridged, at least one pair
};

/// Classification together with the evidence backing it.
struct Classification {
  GraphClass kind = GraphClass::FHMNoPair;
  std::vector<OddCycle> cycles;
  std::vector<DisjointPair> pairs;
  std::optional<DisjointPair> bridgeless_pair;  // witness when NotFHM
};

/// True iff some edge of g has one endpoint in each cycle of the pair.
bool pair_has_bridge(const Graph& g, const OddCycle& a, const OddCycle& b);

Classification classify(const Graph& g, const EnumerationOptions& opts = {});

}  // namespace edgepoly

#endif  // EDGEPOLY_CYCLES_HPP
