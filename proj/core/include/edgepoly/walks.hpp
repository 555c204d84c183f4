#ifndef EDGEPOLY_WALKS_HPP
#define EDGEPOLY_WALKS_HPP

#include <vector>

#include "edgepoly/cycles.hpp"

namespace edgepoly {

enum class ConnectorKind {
  Bridge,       // one endpoint on each cycle of the pair
  ChordFirst,   // chord of the pair's first cycle
  ChordSecond,  // chord of the pair's second cycle
};

/// A bridge of a disjoint pair, or a chord of one of its cycles.
struct Connector {
  ConnectorKind kind = ConnectorKind::Bridge;
  int edge = -1;  // 0-based edge index
  int pair = -1;  // index into the enumerated pair list

  friend bool operator==(const Connector&, const Connector&) = default;
};

/// All connectors of one pair: bridges first, then chords of the first
/// cycle, then chords of the second, each ascending by edge index.
std::vector<Connector> connectors(const Graph& g,
                                  const std::vector<OddCycle>& cycles,
                                  const std::vector<DisjointPair>& pairs,
                                  int pair_index);

/// Even closed walk of a connector. Edge at index i has position i+1;
/// the connector occupies even positions only (two for a bridge, one for
/// a chord) and the total length 2r is even.
struct EvenClosedWalk {
  std::vector<int> edges;  // 0-based edge indices, walk order
  Connector connector;

  int length() const { return static_cast<int>(edges.size()); }
};

/// The walk (C1, b, C2, -b) for a bridge, or the even cycle of a chord
/// with the chord even-numbered. Deterministic representative: for a
/// bridge, C1 is the cycle holding the smaller endpoint and each cycle is
/// traversed toward its smaller-labeled neighbor; for a chord, the even
/// cycle is traversed from the chord endpoint giving the smaller first
/// edge index, chord last.
EvenClosedWalk even_closed_walk(const Graph& g,
                                const std::vector<OddCycle>& cycles,
                                const std::vector<DisjointPair>& pairs,
                                const Connector& conn);

/// Integer coefficient vector f of the strict half-space {x : f.x > 0}:
/// f[e] = (#odd positions of e) - (#even positions of e).
struct InequalityVector {
  std::vector<int> coeffs;  // length n, indexed like Graph::edges()

  friend bool operator==(const InequalityVector&, const InequalityVector&) =
      default;
};

InequalityVector inequality_vector(const Graph& g, const EvenClosedWalk& walk);

/// Inequality vectors over every traversal representative of the
/// connector's walk (cycle roles and orientations for a bridge, both
/// directions for a chord), deduplicated. Odd cycle parity makes all
/// representatives agree, so this has size one; it backs the
/// all-orientations flag and the property test that proves the collapse.
std::vector<InequalityVector> inequality_vector_variants(
    const Graph& g, const std::vector<OddCycle>& cycles,
    const std::vector<DisjointPair>& pairs, const Connector& conn);

}  // namespace edgepoly

#endif  // EDGEPOLY_WALKS_HPP
