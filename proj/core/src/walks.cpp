#include "edgepoly/walks.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace edgepoly {

namespace {

// Edge indices of cyc traversed once around from `start`. Direction: toward
// the smaller labeled cycle-neighbor of start, unless `reverse` flips it.
std::vector<int> traverse_cycle(const Graph& g, const OddCycle& cyc, int start,
                                bool reverse = false) {
  int len = cyc.length();
  int k = 0;
  while (cyc.vertices[k] != start) ++k;
  int nxt = cyc.vertices[(k + 1) % len];
  int prv = cyc.vertices[(k - 1 + len) % len];
  bool forward = nxt < prv;
  if (reverse) forward = !forward;

  std::vector<int> edges;
  edges.reserve(len);
  int pos = k;
  for (int i = 0; i < len; ++i) {
    int next_pos = forward ? (pos + 1) % len : (pos - 1 + len) % len;
    edges.push_back(g.edge_index(cyc.vertices[pos], cyc.vertices[next_pos]));
    pos = next_pos;
  }
  return edges;
}

std::vector<int> bridge_walk(const Graph& g, const OddCycle& c1,
                             const OddCycle& c2, int bridge_edge,
                             bool reverse1 = false, bool reverse2 = false) {
  const Edge& b = g.edge(bridge_edge);
  int foot1 = c1.vset.contains(b.u) ? b.u : b.v;
  int foot2 = c2.vset.contains(b.u) ? b.u : b.v;
  assert(c1.vset.contains(foot1) && c2.vset.contains(foot2));

  std::vector<int> walk = traverse_cycle(g, c1, foot1, reverse1);
  walk.push_back(bridge_edge);
  std::vector<int> part2 = traverse_cycle(g, c2, foot2, reverse2);
  walk.insert(walk.end(), part2.begin(), part2.end());
  walk.push_back(bridge_edge);
  return walk;
}

// The chord splits cyc into an odd and an even cycle; returns the even
// cycle's edges with the chord last (an even position). `from_second`
// starts the traversal at the other chord endpoint.
std::vector<int> chord_walk_direction(const Graph& g, const OddCycle& cyc,
                                      int chord_edge, bool from_second) {
  const Edge& c = g.edge(chord_edge);
  int len = cyc.length();
  int ka = 0, kb = 0;
  for (int i = 0; i < len; ++i) {
    if (cyc.vertices[i] == c.u) ka = i;
    if (cyc.vertices[i] == c.v) kb = i;
  }
  // Arc from ka forward to kb, and its complement.
  std::vector<int> arc1, arc2;
  for (int i = ka; i != kb; i = (i + 1) % len) arc1.push_back(cyc.vertices[i]);
  arc1.push_back(cyc.vertices[kb]);
  for (int i = kb; i != ka; i = (i + 1) % len) arc2.push_back(cyc.vertices[i]);
  arc2.push_back(cyc.vertices[ka]);

  // The even closed walk is (odd-length arc) + chord.
  std::vector<int>& arc = (arc1.size() - 1) % 2 == 1 ? arc1 : arc2;
  if (from_second) std::reverse(arc.begin(), arc.end());

  std::vector<int> walk;
  walk.reserve(arc.size());
  for (size_t i = 0; i + 1 < arc.size(); ++i)
    walk.push_back(g.edge_index(arc[i], arc[i + 1]));
  walk.push_back(chord_edge);
  return walk;
}

std::vector<int> chord_walk(const Graph& g, const OddCycle& cyc,
                            int chord_edge) {
  std::vector<int> a = chord_walk_direction(g, cyc, chord_edge, false);
  std::vector<int> b = chord_walk_direction(g, cyc, chord_edge, true);
  return a.front() <= b.front() ? a : b;  // smaller first edge index
}

}  // namespace

std::vector<Connector> connectors(const Graph& g,
                                  const std::vector<OddCycle>& cycles,
                                  const std::vector<DisjointPair>& pairs,
                                  int pair_index) {
  const DisjointPair& p = pairs.at(pair_index);
  const OddCycle& a = cycles[p.first];
  const OddCycle& b = cycles[p.second];

  DynBitset cycle_edges_a(g.edge_count()), cycle_edges_b(g.edge_count());
  for (int e : a.edges) cycle_edges_a.insert(e);
  for (int e : b.edges) cycle_edges_b.insert(e);

  std::vector<Connector> out;
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges()[k];
    bool ua = a.vset.contains(e.u), va = a.vset.contains(e.v);
    bool ub = b.vset.contains(e.u), vb = b.vset.contains(e.v);
    if ((ua && vb) || (ub && va))
      out.push_back({ConnectorKind::Bridge, k, pair_index});
  }
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges()[k];
    if (a.vset.contains(e.u) && a.vset.contains(e.v) &&
        !cycle_edges_a.contains(k))
      out.push_back({ConnectorKind::ChordFirst, k, pair_index});
  }
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges()[k];
    if (b.vset.contains(e.u) && b.vset.contains(e.v) &&
        !cycle_edges_b.contains(k))
      out.push_back({ConnectorKind::ChordSecond, k, pair_index});
  }
  return out;
}

EvenClosedWalk even_closed_walk(const Graph& g,
                                const std::vector<OddCycle>& cycles,
                                const std::vector<DisjointPair>& pairs,
                                const Connector& conn) {
  const DisjointPair& p = pairs.at(conn.pair);
  const OddCycle& first = cycles[p.first];
  const OddCycle& second = cycles[p.second];

  EvenClosedWalk walk;
  walk.connector = conn;
  switch (conn.kind) {
    case ConnectorKind::Bridge: {
      // C1 = the cycle holding the lexicographically smaller endpoint.
      const Edge& b = g.edge(conn.edge);
      const OddCycle& c1 = first.vset.contains(b.u) ? first : second;
      const OddCycle& c2 = first.vset.contains(b.u) ? second : first;
      walk.edges = bridge_walk(g, c1, c2, conn.edge);
      break;
    }
    case ConnectorKind::ChordFirst:
      walk.edges = chord_walk(g, first, conn.edge);
      break;
    case ConnectorKind::ChordSecond:
      walk.edges = chord_walk(g, second, conn.edge);
      break;
  }
  return walk;
}

InequalityVector inequality_vector(const Graph& g, const EvenClosedWalk& walk) {
  InequalityVector f;
  f.coeffs.assign(g.edge_count(), 0);
  for (int i = 0; i < walk.length(); ++i) {
    int position = i + 1;
    f.coeffs[walk.edges[i]] += (position % 2 == 1) ? 1 : -1;
  }
  return f;
}

std::vector<InequalityVector> inequality_vector_variants(
    const Graph& g, const std::vector<OddCycle>& cycles,
    const std::vector<DisjointPair>& pairs, const Connector& conn) {
  const DisjointPair& p = pairs.at(conn.pair);
  std::set<std::vector<int>> seen;
  std::vector<InequalityVector> out;
  auto add = [&](std::vector<int> walk_edges) {
    EvenClosedWalk w;
    w.connector = conn;
    w.edges = std::move(walk_edges);
    InequalityVector f = inequality_vector(g, w);
    if (seen.insert(f.coeffs).second) out.push_back(std::move(f));
  };

  if (conn.kind == ConnectorKind::Bridge) {
    const OddCycle& first = cycles[p.first];
    const OddCycle& second = cycles[p.second];
    for (int role = 0; role < 2; ++role)
      for (int r1 = 0; r1 < 2; ++r1)
        for (int r2 = 0; r2 < 2; ++r2) {
          const OddCycle& c1 = role ? second : first;
          const OddCycle& c2 = role ? first : second;
          add(bridge_walk(g, c1, c2, conn.edge, r1 != 0, r2 != 0));
        }
  } else {
    const OddCycle& cyc =
        cycles[conn.kind == ConnectorKind::ChordFirst ? p.first : p.second];
    add(chord_walk_direction(g, cyc, conn.edge, false));
    add(chord_walk_direction(g, cyc, conn.edge, true));
  }
  return out;
}

}  // namespace edgepoly
