#include "edgepoly/cycles.hpp"

#include <algorithm>

namespace edgepoly {

namespace {

// Rebuild a vertex sequence as a canonical OddCycle against g.
OddCycle finish_cycle(const Graph& g, const std::vector<int>& path) {
  OddCycle c;
  c.vertices = path;
  c.vset = VertexSet(g.vertex_count() + 1);
  for (int v : path) c.vset.insert(v);
  int len = static_cast<int>(path.size());
  c.edges.reserve(len);
  for (int i = 0; i < len; ++i)
    c.edges.push_back(g.edge_index(path[i], path[(i + 1) % len]));
  return c;
}

bool has_chord(const Graph& g, const std::vector<int>& path) {
  int len = static_cast<int>(path.size());
  for (int i = 0; i < len; ++i)
    for (int j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;  // cycle edge, not a chord
      if (g.adjacent(path[i], path[j])) return true;
    }
  return false;
}

}  // namespace

std::vector<OddCycle> enumerate_odd_cycles(const Graph& g,
                                           const EnumerationOptions& opts) {
  int max_len = opts.max_length > 0 ? opts.max_length : g.vertex_count();
  std::vector<OddCycle> out;
  long long count = 0;

  // Roots ascending; only vertices > root may join the path, so every cycle
  // is found exactly once from its minimal vertex. Requiring
  // path[1] < path.back() picks one of the two traversal directions.
  std::vector<int> path;
  std::vector<char> on_path(g.vertex_count() + 1, 0);

  auto dfs = [&](auto&& self, int root) -> void {
    int u = path.back();
    for (int w : g.neighbors(u)) {
      if (w == root && path.size() >= 3) {
        if (path[1] < path.back() && path.size() % 2 == 1) {
          if (opts.chordless_only && has_chord(g, path)) continue;
          if (++count > opts.budget)
            throw EnumerationBudgetExceeded(
                "odd cycle enumeration exceeded budget of " +
                std::to_string(opts.budget));
          out.push_back(finish_cycle(g, path));
        }
      } else if (w > root && !on_path[w] &&
                 static_cast<int>(path.size()) < max_len) {
        path.push_back(w);
        on_path[w] = 1;
        self(self, root);
        path.pop_back();
        on_path[w] = 0;
      }
    }
  };

  for (int root = 1; root <= g.vertex_count(); ++root) {
    path.assign(1, root);
    on_path[root] = 1;
    dfs(dfs, root);
    on_path[root] = 0;
  }

  std::sort(out.begin(), out.end(), [](const OddCycle& a, const OddCycle& b) {
    return a.vertices < b.vertices;
  });
  return out;
}

std::vector<DisjointPair> enumerate_disjoint_pairs(
    const Graph& g, const std::vector<OddCycle>& cycles) {
  // Bucket by length: two cycles can only be disjoint when their lengths
  // sum to at most d, which prunes almost everything on dense graphs.
  std::vector<std::vector<int>> by_len(g.vertex_count() + 1);
  for (int i = 0; i < static_cast<int>(cycles.size()); ++i)
    by_len[cycles[i].length()].push_back(i);

  std::vector<DisjointPair> out;
  for (int la = 3; la <= g.vertex_count(); la += 2) {
    for (int lb = la; la + lb <= g.vertex_count(); lb += 2) {
      for (size_t ai = 0; ai < by_len[la].size(); ++ai) {
        size_t start = (la == lb) ? ai + 1 : 0;
        for (size_t bi = start; bi < by_len[lb].size(); ++bi) {
          int i = by_len[la][ai], j = by_len[lb][bi];
          if (!cycles[i].vset.intersects(cycles[j].vset))
            out.push_back(DisjointPair{std::min(i, j), std::max(i, j)});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const DisjointPair& a, const DisjointPair& b) {
              return std::pair(a.first, a.second) < std::pair(b.first, b.second);
            });
  return out;
}

bool pair_has_bridge(const Graph& g, const OddCycle& a, const OddCycle& b) {
  for (const Edge& e : g.edges()) {
    bool ua = a.vset.contains(e.u), va = a.vset.contains(e.v);
    bool ub = b.vset.contains(e.u), vb = b.vset.contains(e.v);
    if ((ua && vb) || (ub && va)) return true;
  }
  return false;
}

Classification classify(const Graph& g, const EnumerationOptions& opts) {
  Classification c;
  c.cycles = enumerate_odd_cycles(g, opts);
  c.pairs = enumerate_disjoint_pairs(g, c.cycles);
  if (c.pairs.empty()) {
    c.kind = GraphClass::FHMNoPair;
    return c;
  }
  for (const DisjointPair& p : c.pairs) {
    if (!pair_has_bridge(g, c.cycles[p.first], c.cycles[p.second])) {
      c.kind = GraphClass::NotFHM;
      c.bridgeless_pair = p;
      return c;
    }
  }
  c.kind = GraphClass::FundamentalFHM;
  return c;
}

}  // namespace edgepoly
