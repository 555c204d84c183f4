#ifndef EDGEPOLY_GRAPH_HPP
#define EDGEPOLY_GRAPH_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgepoly/errors.hpp"

namespace edgepoly {

/// Unordered vertex pair, stored with u < v. Vertices are 1-based labels.
struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Vertex of the edge polytope: rho(e) = e_u + e_v in Z^d.
/// Exactly two coordinates are 1, the rest 0.
struct EdgeVector {
  std::vector<int> coords;

  friend bool operator==(const EdgeVector&, const EdgeVector&) = default;
};

/// Finite connected simple graph on vertices {1..d} with an indexed edge
/// list e_1..e_n. Edge order is fixed at construction and every coefficient
/// vector downstream is indexed by it. Immutable after construction.
class Graph {
 public:
  /// Validates simplicity and connectedness; throws LoopEdge, DuplicateEdge,
  /// Disconnected or BadIndex (vertex label out of 1..d) accordingly.
  Graph(int vertex_count, std::vector<Edge> edges);

  /// Parse the edge-list document format: one edge per line, two
  /// whitespace-separated positive integers; '#' starts a comment; blank
  /// lines ignored. Vertices must be labeled 1..max-label with no gaps.
  static Graph parse_edge_list(std::string_view text);

  /// Complete graph K_m, edges in lexicographic order.
  static Graph complete(int m);

  /// Two vertex-disjoint odd cycles of the given lengths joined by exactly
  /// one bridge edge; cycle one on vertices 1..len1, cycle two on
  /// len1+1..len1+len2, bridge {1, len1+1}. Edges in lexicographic order.
  static Graph two_odd_cycles_bridged(int len1, int len2);

  /// Convenience for fixtures: vertex count inferred from max label.
  static Graph from_edges(const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Edges by 0-based index; the spec-facing index of edges_[k] is k+1.
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const;

  /// 0-based index of edge {u,v}, or -1 if absent.
  int edge_index(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

  /// 0-based indices of edges incident to vertex v.
  const std::vector<int>& incident_edges(int v) const;

  /// Neighbors of vertex v, ascending.
  const std::vector<int>& neighbors(int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;   // vertex label -> edge indices
  std::vector<std::vector<int>> neighbors_;  // vertex label -> vertex labels
};

/// rho(e_index) as a point of Z^d (index 0-based).
EdgeVector rho(const Graph& g, int edge_index);

}  // namespace edgepoly

#endif  // EDGEPOLY_GRAPH_HPP
