#include <doctest.h>

#include "edgepoly/graph.hpp"

using namespace edgepoly;

TEST_CASE("parse triangle") {
  Graph g = Graph::parse_edge_list("1 2\n2 3\n1 3");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.edges()[0] == Edge{1, 2});
  CHECK(g.edges()[1] == Edge{2, 3});
  CHECK(g.edges()[2] == Edge{1, 3});
}

TEST_CASE("parse rejects loop") {
  CHECK_THROWS_AS(Graph::parse_edge_list("1 1"), LoopEdge);
}

TEST_CASE("parse rejects disconnected") {
  CHECK_THROWS_AS(Graph::parse_edge_list("1 2\n3 4"), Disconnected);
}

TEST_CASE("parse rejects duplicates, either orientation") {
  CHECK_THROWS_AS(Graph::parse_edge_list("1 2\n2 1"), DuplicateEdge);
}

TEST_CASE("parse comments, blank lines, line numbers") {
  Graph g = Graph::parse_edge_list("# triangle\n\n1 2  # first\n2 3\n1 3\n");
  CHECK(g.edge_count() == 3);

  try {
    Graph::parse_edge_list("1 2\n2 3 junk\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("parse rejects label gaps") {
  CHECK_THROWS_AS(Graph::parse_edge_list("1 2\n2 4\n4 1"), ParseError);
}

TEST_CASE("parse is deterministic") {
  const char* doc = "3 5\n1 2\n2 3\n1 3\n3 4\n4 5\n1 5\n";
  Graph a = Graph::parse_edge_list(doc);
  Graph b = Graph::parse_edge_list(doc);
  CHECK(a == b);
  CHECK(a.edges()[0] == Edge{3, 5});  // input order kept
}

TEST_CASE("complete graph") {
  Graph k6 = Graph::complete(6);
  CHECK(k6.vertex_count() == 6);
  CHECK(k6.edge_count() == 15);
  CHECK(k6.edges().front() == Edge{1, 2});
  CHECK(k6.edges().back() == Edge{5, 6});

  Graph k3 = Graph::complete(3);
  CHECK(k3.edge_count() == 3);

  Graph k2 = Graph::complete(2);
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);

  CHECK_THROWS_AS(Graph::complete(1), TooSmall);
}

TEST_CASE("two odd cycles bridged") {
  Graph g = Graph::two_odd_cycles_bridged(3, 3);
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 7);
  CHECK(g.adjacent(1, 4));  // the bridge
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(4, 5));

  Graph h = Graph::two_odd_cycles_bridged(3, 5);
  CHECK(h.vertex_count() == 8);
  CHECK(h.edge_count() == 9);

  CHECK_THROWS_AS(Graph::two_odd_cycles_bridged(4, 3), BadLength);
  CHECK_THROWS_AS(Graph::two_odd_cycles_bridged(3, 1), BadLength);
}

TEST_CASE("rho") {
  Graph tri = Graph::parse_edge_list("1 2\n2 3\n1 3");
  CHECK(rho(tri, 0).coords == std::vector<int>{1, 1, 0});

  Graph k6 = Graph::complete(6);
  int e56 = k6.edge_index(5, 6);
  CHECK(rho(k6, e56).coords == std::vector<int>{0, 0, 0, 0, 1, 1});

  for (int k = 0; k < k6.edge_count(); ++k) {
    int sum = 0;
    for (int c : rho(k6, k).coords) sum += c;
    CHECK(sum == 2);
  }
  CHECK_THROWS_AS(rho(k6, 15), BadIndex);
  CHECK_THROWS_AS(rho(k6, -1), BadIndex);
}

TEST_CASE("rho is injective on edge indices") {
  Graph k6 = Graph::complete(6);
  for (int i = 0; i < k6.edge_count(); ++i)
    for (int j = i + 1; j < k6.edge_count(); ++j)
      CHECK(rho(k6, i) != rho(k6, j));
}
