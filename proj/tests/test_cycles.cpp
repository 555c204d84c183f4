#include <algorithm>
#include <doctest.h>
#include <optional>
#include <random>
#include <set>

#include "edgepoly/cycles.hpp"

using namespace edgepoly;

namespace {

// Independent oracle for small graphs: an odd cycle with vertex set S is a
// Hamiltonian cycle of the induced subgraph G[S], so count those over all
// odd subsets by brute-force permutation.
long long oracle_odd_cycle_count(const Graph& g, int max_len) {
  int d = g.vertex_count();
  REQUIRE(d <= 8);
  long long total = 0;
  for (int mask = 0; mask < (1 << d); ++mask) {
    std::vector<int> verts;
    for (int v = 1; v <= d; ++v)
      if (mask & (1 << (v - 1))) verts.push_back(v);
    int k = static_cast<int>(verts.size());
    if (k < 3 || k % 2 == 0 || k > max_len) continue;

    // Fix the minimal vertex first; dedup direction via second < last.
    std::vector<int> rest(verts.begin() + 1, verts.end());
    std::sort(rest.begin(), rest.end());
    do {
      if (rest.front() > rest.back()) continue;
      bool ok = g.adjacent(verts[0], rest.front()) &&
                g.adjacent(rest.back(), verts[0]);
      for (size_t i = 0; ok && i + 1 < rest.size(); ++i)
        ok = g.adjacent(rest[i], rest[i + 1]);
      if (ok) ++total;
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return total;
}

long long oracle_disjoint_pair_count(const Graph& g) {
  auto cycles = enumerate_odd_cycles(g);
  long long total = 0;
  for (size_t i = 0; i < cycles.size(); ++i)
    for (size_t j = i + 1; j < cycles.size(); ++j) {
      bool disjoint = true;
      for (int v : cycles[i].vertices)
        for (int w : cycles[j].vertices)
          if (v == w) disjoint = false;
      if (disjoint) ++total;
    }
  return total;
}

Graph bowtie() {
  return Graph::from_edges({{1, 2}, {2, 3}, {1, 3}, {1, 4}, {4, 5}, {1, 5}});
}

Graph path_joined_triangles() {
  return Graph::from_edges(
      {{1, 2}, {2, 3}, {1, 3}, {5, 6}, {6, 7}, {5, 7}, {1, 4}, {4, 5}});
}

}  // namespace

TEST_CASE("triangle has one odd cycle") {
  Graph tri = Graph::complete(3);
  auto cycles = enumerate_odd_cycles(tri);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].vertices == std::vector<int>{1, 2, 3});
  CHECK(cycles[0].edges.size() == 3);
}

TEST_CASE("even cycle C4 has none") {
  Graph c4 = Graph::from_edges({{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CHECK(enumerate_odd_cycles(c4).empty());
}

TEST_CASE("K6 census: 92 odd cycles, 20 triangles, 72 five-cycles") {
  Graph k6 = Graph::complete(6);
  auto cycles = enumerate_odd_cycles(k6);
  REQUIRE(cycles.size() == 92);
  int tri = 0, five = 0;
  for (const auto& c : cycles) {
    if (c.length() == 3) ++tri;
    if (c.length() == 5) ++five;
  }
  CHECK(tri == 20);
  CHECK(five == 72);
  CHECK(oracle_odd_cycle_count(k6, 6) == 92);
}

TEST_CASE("cycles are canonical, sorted, and valid") {
  Graph k6 = Graph::complete(6);
  auto cycles = enumerate_odd_cycles(k6);
  std::set<std::vector<int>> seen;
  for (const auto& c : cycles) {
    CHECK(c.length() % 2 == 1);
    CHECK(c.length() >= 3);
    // canonical: minimal vertex first, smaller second neighbor
    CHECK(*std::min_element(c.vertices.begin(), c.vertices.end()) ==
          c.vertices.front());
    CHECK(c.vertices[1] < c.vertices.back());
    // closed walk over existing edges with distinct vertices
    std::set<int> distinct(c.vertices.begin(), c.vertices.end());
    CHECK(static_cast<int>(distinct.size()) == c.length());
    for (int i = 0; i < c.length(); ++i) {
      int u = c.vertices[i], v = c.vertices[(i + 1) % c.length()];
      CHECK(c.edges[i] == k6.edge_index(u, v));
    }
    CHECK(seen.insert(c.vertices).second);  // no duplicates
  }
  CHECK(std::is_sorted(cycles.begin(), cycles.end(),
                       [](const OddCycle& a, const OddCycle& b) {
                         return a.vertices < b.vertices;
                       }));
}

TEST_CASE("max_length bound") {
  Graph k6 = Graph::complete(6);
  EnumerationOptions opts;
  opts.max_length = 3;
  CHECK(enumerate_odd_cycles(k6, opts).size() == 20);
  CHECK(oracle_odd_cycle_count(k6, 3) == 20);
}

TEST_CASE("enumeration budget") {
  Graph k6 = Graph::complete(6);
  EnumerationOptions opts;
  opts.budget = 50;
  CHECK_THROWS_AS(enumerate_odd_cycles(k6, opts), EnumerationBudgetExceeded);
}

TEST_CASE("chordless-only flag") {
  // 5-cycle with one chord: the 5-cycle itself has a chord, the triangle
  // it cuts off does not.
  Graph g = Graph::from_edges({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 3}});
  CHECK(enumerate_odd_cycles(g).size() == 2);
  EnumerationOptions opts;
  opts.chordless_only = true;
  auto chordless = enumerate_odd_cycles(g, opts);
  REQUIRE(chordless.size() == 1);
  CHECK(chordless[0].vertices == std::vector<int>{1, 2, 3});
}

TEST_CASE("K6 disjoint pairs: exactly 10, all triangle-triangle") {
  Graph k6 = Graph::complete(6);
  auto cycles = enumerate_odd_cycles(k6);
  auto pairs = enumerate_disjoint_pairs(k6, cycles);
  REQUIRE(pairs.size() == 10);
  for (const auto& p : pairs) {
    CHECK(cycles[p.first].length() == 3);
    CHECK(cycles[p.second].length() == 3);
    CHECK(!cycles[p.first].vset.intersects(cycles[p.second].vset));
  }
  CHECK(oracle_disjoint_pair_count(k6) == 10);
}

TEST_CASE("bridged triangles have one pair; bowtie none") {
  Graph g = Graph::two_odd_cycles_bridged(3, 3);
  auto cycles = enumerate_odd_cycles(g);
  CHECK(enumerate_disjoint_pairs(g, cycles).size() == 1);

  Graph b = bowtie();
  auto bcycles = enumerate_odd_cycles(b);
  CHECK(bcycles.size() == 2);
  CHECK(enumerate_disjoint_pairs(b, bcycles).empty());
}

TEST_CASE("classify: the three classes") {
  Classification k6 = classify(Graph::complete(6));
  CHECK(k6.kind == GraphClass::FundamentalFHM);
  CHECK(k6.pairs.size() == 10);

  Classification bt = classify(bowtie());
  CHECK(bt.kind == GraphClass::FHMNoPair);
  CHECK(bt.pairs.empty());

  Classification pj = classify(path_joined_triangles());
  CHECK(pj.kind == GraphClass::NotFHM);
  REQUIRE(pj.bridgeless_pair.has_value());
  const auto& bp = *pj.bridgeless_pair;
  CHECK(!pj.cycles[bp.first].vset.intersects(pj.cycles[bp.second].vset));
  CHECK(!pair_has_bridge(path_joined_triangles(), pj.cycles[bp.first],
                         pj.cycles[bp.second]));
}

TEST_CASE("random small graphs agree with the subset oracle") {
  std::mt19937 rng(20240817);
  int tested = 0;
  while (tested < 25) {
    int d = 4 + static_cast<int>(rng() % 5);  // 4..8
    double prob = 0.3 + 0.5 * (rng() % 100) / 100.0;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j)
        if (std::uniform_real_distribution<>(0, 1)(rng) < prob)
          edges.push_back({i, j});
    std::optional<Graph> g;
    try {
      g = Graph::from_edges(edges);
      if (g->vertex_count() != d) continue;
    } catch (const Error&) {
      continue;  // disconnected or empty sample
    }
    ++tested;
    CHECK(static_cast<long long>(enumerate_odd_cycles(*g).size()) ==
          oracle_odd_cycle_count(*g, d));
    auto cycles = enumerate_odd_cycles(*g);
    CHECK(static_cast<long long>(enumerate_disjoint_pairs(*g, cycles).size()) ==
          oracle_disjoint_pair_count(*g));
  }
}

TEST_CASE("FHMNoPair implies no disjoint pairs") {
  for (const Graph& g : {bowtie(), Graph::complete(3), Graph::complete(4)}) {
    Classification c = classify(g);
    if (c.kind == GraphClass::FHMNoPair) CHECK(c.pairs.empty());
  }
}
