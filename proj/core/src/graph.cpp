#include "edgepoly/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace edgepoly {

namespace {

Edge make_edge(int u, int v) {
  if (u > v) std::swap(u, v);
  return Edge{u, v};
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) throw BadIndex("graph needs at least one vertex");

  std::set<Edge> seen;
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v)
      throw LoopEdge("loop edge {" + std::to_string(e.u) + "," +
                     std::to_string(e.v) + "}");
    if (e.u < 1 || e.v > vertex_count_)
      throw BadIndex("edge {" + std::to_string(e.u) + "," +
                     std::to_string(e.v) + "} out of vertex range 1.." +
                     std::to_string(vertex_count_));
    if (!seen.insert(e).second)
      throw DuplicateEdge("duplicate edge {" + std::to_string(e.u) + "," +
                          std::to_string(e.v) + "}");
  }

  incident_.assign(vertex_count_ + 1, {});
  neighbors_.assign(vertex_count_ + 1, {});
  for (int k = 0; k < static_cast<int>(edges_.size()); ++k) {
    incident_[edges_[k].u].push_back(k);
    incident_[edges_[k].v].push_back(k);
    neighbors_[edges_[k].u].push_back(edges_[k].v);
    neighbors_[edges_[k].v].push_back(edges_[k].u);
  }
  for (int v = 1; v <= vertex_count_; ++v)
    std::sort(neighbors_[v].begin(), neighbors_[v].end());

  // Connectedness over all d vertices (isolated vertices also disconnect).
  std::vector<char> visited(vertex_count_ + 1, 0);
  std::vector<int> stack{1};
  visited[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : neighbors_[u]) {
      if (!visited[w]) {
        visited[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertex_count_)
    throw Disconnected("graph is not connected (" + std::to_string(reached) +
                       " of " + std::to_string(vertex_count_) +
                       " vertices reachable from vertex 1)");
}

Graph Graph::parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int max_label = 0;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    int u = 0, v = 0;
    if (!(ls >> u)) continue;  // blank or comment-only line
    if (!(ls >> v))
      throw ParseError("expected two vertex labels", line_no);
    std::string rest;
    if (ls >> rest)
      throw ParseError("trailing content after edge: '" + rest + "'", line_no);
    if (u < 1 || v < 1)
      throw ParseError("vertex labels must be positive", line_no);
    edges.push_back(make_edge(u, v));
    max_label = std::max({max_label, u, v});
  }
  if (edges.empty()) throw ParseError("no edges in document", line_no);

  // Contiguous 1-based labels: a gap would leave an isolated phantom vertex,
  // which the connectedness check reports; detect it explicitly for a
  // clearer message.
  std::vector<char> present(max_label + 1, 0);
  for (const auto& e : edges) present[e.u] = present[e.v] = 1;
  for (int v = 1; v <= max_label; ++v)
    if (!present[v])
      throw ParseError("vertex labels have a gap: " + std::to_string(v) +
                           " unused but " + std::to_string(max_label) +
                           " present",
                       line_no);

  return Graph(max_label, std::move(edges));
}

Graph Graph::complete(int m) {
  if (m < 2) throw TooSmall("complete graph needs m >= 2");
  std::vector<Edge> edges;
  edges.reserve(m * (m - 1) / 2);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) edges.push_back(Edge{i, j});
  return Graph(m, std::move(edges));
}

Graph Graph::two_odd_cycles_bridged(int len1, int len2) {
  for (int len : {len1, len2})
    if (len < 3 || len % 2 == 0)
      throw BadLength("cycle length " + std::to_string(len) +
                      " must be odd and >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < len1; ++i)
    edges.push_back(make_edge(1 + i, 1 + (i + 1) % len1));
  for (int i = 0; i < len2; ++i)
    edges.push_back(make_edge(len1 + 1 + i, len1 + 1 + (i + 1) % len2));
  edges.push_back(make_edge(1, len1 + 1));
  std::sort(edges.begin(), edges.end());
  return Graph(len1 + len2, std::move(edges));
}

Graph Graph::from_edges(const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  int max_label = 0;
  for (auto [u, v] : edges) {
    es.push_back(make_edge(u, v));
    max_label = std::max({max_label, u, v});
  }
  return Graph(max_label, std::move(es));
}

const Edge& Graph::edge(int index) const {
  if (index < 0 || index >= edge_count())
    throw BadIndex("edge index " + std::to_string(index) + " out of 0.." +
                   std::to_string(edge_count() - 1));
  return edges_[index];
}

int Graph::edge_index(int u, int v) const {
  if (u < 1 || v < 1 || u > vertex_count_ || v > vertex_count_) return -1;
  Edge e = make_edge(u, v);
  for (int k : incident_[e.u])
    if (edges_[k] == e) return k;
  return -1;
}

const std::vector<int>& Graph::incident_edges(int v) const {
  if (v < 1 || v > vertex_count_)
    throw BadIndex("vertex " + std::to_string(v) + " out of 1.." +
                   std::to_string(vertex_count_));
  return incident_[v];
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 1 || v > vertex_count_)
    throw BadIndex("vertex " + std::to_string(v) + " out of 1.." +
                   std::to_string(vertex_count_));
  return neighbors_[v];
}

EdgeVector rho(const Graph& g, int edge_index) {
  const Edge& e = g.edge(edge_index);
  EdgeVector out;
  out.coords.assign(g.vertex_count(), 0);
  out.coords[e.u - 1] = 1;
  out.coords[e.v - 1] = 1;
  return out;
}

}  // namespace edgepoly
